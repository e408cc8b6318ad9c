#include "cauchynet/baseline.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "cauchynet/errors.hpp"

namespace cauchynet {

using nlohmann::json;

MlpModel::MlpModel(std::size_t hidden, std::size_t inputs)
    : hidden(hidden), inputs(inputs), w1(hidden * inputs), b1(hidden), w2(hidden) {
  validate();
}

void MlpModel::validate() const {
  if (hidden < 1 || inputs < 1) throw ValidationError("MLP needs hidden >= 1 and inputs >= 1");
  if (w1.size() != hidden * inputs || b1.size() != hidden || w2.size() != hidden) {
    throw ValidationError("MLP parameter shapes are inconsistent");
  }
}

void MlpModel::gather(std::span<double> out) const {
  auto it = std::copy(w1.begin(), w1.end(), out.begin());
  it = std::copy(b1.begin(), b1.end(), it);
  it = std::copy(w2.begin(), w2.end(), it);
  *it = b2;
}

void MlpModel::scatter(std::span<const double> in) {
  auto it = in.begin();
  std::copy_n(it, w1.size(), w1.begin());
  it += static_cast<std::ptrdiff_t>(w1.size());
  std::copy_n(it, b1.size(), b1.begin());
  it += static_cast<std::ptrdiff_t>(b1.size());
  std::copy_n(it, w2.size(), w2.begin());
  it += static_cast<std::ptrdiff_t>(w2.size());
  b2 = *it;
}

double MlpModel::predict(std::span<const double> x) const { return mlp_forward(*this, x); }

LossValue MlpModel::evaluate_loss(std::span<const double> x, double y_true, double) const {
  return loss(mlp_forward(*this, x), 0.0, y_true, 0.0);
}

MlpModel init_mlp(std::size_t hidden, std::size_t inputs, Rng& rng) {
  MlpModel model(hidden, inputs);
  const double s1 = std::sqrt(2.0 / static_cast<double>(inputs));
  const double s2 = std::sqrt(2.0 / static_cast<double>(hidden));
  for (double& w : model.w1) w = s1 * rng.normal();
  for (double& w : model.w2) w = s2 * rng.normal();
  return model;
}

namespace {

double pre_activation(const MlpModel& model, std::size_t k, std::span<const double> x) {
  double a = model.b1[k];
  for (std::size_t i = 0; i < model.inputs; ++i) a += model.w1[k * model.inputs + i] * x[i];
  return a;
}

}  // namespace

double mlp_forward(const MlpModel& model, std::span<const double> x) {
  if (x.size() != model.inputs) throw LengthMismatch("input length does not match MLP");
  double y = model.b2;
  for (std::size_t k = 0; k < model.hidden; ++k) {
    const double a = pre_activation(model, k, x);
    if (a > 0.0) y += model.w2[k] * a;
  }
  return y;
}

LossValue MlpModel::accumulate_gradient(std::span<const double> x, double y_true, double,
                                        std::span<double> grad) const {
  if (x.size() != inputs) throw LengthMismatch("input length does not match MLP");
  // Two passes: output first, then the gated backward sweep.
  double y = b2;
  for (std::size_t k = 0; k < hidden; ++k) {
    const double a = pre_activation(*this, k, x);
    if (a > 0.0) y += w2[k] * a;
  }
  const double dy = 2.0 * (y - y_true);
  const std::size_t b1_off = hidden * inputs;
  const std::size_t w2_off = b1_off + hidden;
  const std::size_t b2_off = w2_off + hidden;
  for (std::size_t k = 0; k < hidden; ++k) {
    const double a = pre_activation(*this, k, x);
    if (a <= 0.0) continue;
    grad[w2_off + k] += dy * a;
    const double da = dy * w2[k];
    grad[b1_off + k] += da;
    for (std::size_t i = 0; i < inputs; ++i) grad[k * inputs + i] += da * x[i];
  }
  grad[b2_off] += dy;
  return loss(y, 0.0, y_true, 0.0);
}

std::vector<double> mlp_backward(const MlpModel& model, std::span<const double> x, double y_true) {
  std::vector<double> grad(model.parameter_size(), 0.0);
  model.accumulate_gradient(x, y_true, 0.0, grad);
  return grad;
}

std::vector<double> mlp_finite_difference(const MlpModel& model, std::span<const double> x,
                                          double y_true, double step) {
  if (!(step > 0.0)) throw ValidationError("finite-difference step must be > 0");
  MlpModel probe = model;
  std::vector<double> params(model.parameter_size());
  model.gather(params);
  std::vector<double> grad(params.size());
  for (std::size_t p = 0; p < params.size(); ++p) {
    const double saved = params[p];
    params[p] = saved + step;
    probe.scatter(params);
    const double up = probe.evaluate_loss(x, y_true, 0.0).total;
    params[p] = saved - step;
    probe.scatter(params);
    const double down = probe.evaluate_loss(x, y_true, 0.0).total;
    params[p] = saved;
    grad[p] = (up - down) / (2.0 * step);
  }
  return grad;
}

void save_mlp_checkpoint(const MlpModel& model, const ScalerState& scaler, std::uint64_t seed,
                         const std::filesystem::path& path) {
  json w1 = json::array();
  for (std::size_t k = 0; k < model.hidden; ++k) {
    w1.push_back(std::vector<double>(
        model.w1.begin() + static_cast<std::ptrdiff_t>(k * model.inputs),
        model.w1.begin() + static_cast<std::ptrdiff_t>((k + 1) * model.inputs)));
  }
  json doc;
  doc["version"] = 1;
  doc["model_type"] = "relu_mlp";
  doc["h"] = model.hidden;
  doc["m"] = model.inputs;
  doc["W1"] = std::move(w1);
  doc["b1"] = model.b1;
  doc["W2"] = model.w2;
  doc["b2"] = model.b2;
  doc["scaler"] = {{"min", scaler.min},
                   {"max", scaler.max},
                   {"range_lo", scaler.range_lo},
                   {"range_hi", scaler.range_hi}};
  doc["seed"] = seed;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open checkpoint for writing: " + path.string());
  out << doc.dump(1) << '\n';
}

MlpCheckpoint load_mlp_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open checkpoint: " + path.string());
  try {
    const json doc = json::parse(in);
    if (doc.at("version").get<int>() != 1) throw SchemaError("unsupported checkpoint version");
    if (doc.at("model_type") != "relu_mlp") throw SchemaError("checkpoint is not a relu_mlp");
    MlpCheckpoint cp;
    cp.model = MlpModel(doc.at("h").get<std::size_t>(), doc.at("m").get<std::size_t>());
    const json& w1 = doc.at("W1");
    if (w1.size() != cp.model.hidden) throw SchemaError("W1 must have h rows");
    for (std::size_t k = 0; k < cp.model.hidden; ++k) {
      const auto row = w1[k].get<std::vector<double>>();
      if (row.size() != cp.model.inputs) throw SchemaError("W1 row must have m entries");
      std::copy(row.begin(), row.end(),
                cp.model.w1.begin() + static_cast<std::ptrdiff_t>(k * cp.model.inputs));
    }
    cp.model.b1 = doc.at("b1").get<std::vector<double>>();
    cp.model.w2 = doc.at("W2").get<std::vector<double>>();
    cp.model.b2 = doc.at("b2").get<double>();
    cp.model.validate();
    const json& s = doc.at("scaler");
    cp.scaler = {s.at("min").get<double>(), s.at("max").get<double>(),
                 s.at("range_lo").get<double>(), s.at("range_hi").get<double>()};
    cp.seed = doc.at("seed").get<std::uint64_t>();
    return cp;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed checkpoint: ") + e.what());
  } catch (const ValidationError& e) {
    throw SchemaError(e.what());
  }
}

}  // namespace cauchynet
