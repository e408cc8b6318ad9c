#include "cauchynet/model.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <string>

#include <json.hpp>

#include "cauchynet/errors.hpp"

namespace cauchynet {

using nlohmann::json;

CauchyNetModel::CauchyNetModel(std::size_t hidden, std::size_t inputs, double epsilon)
    : hidden(hidden), inputs(inputs), epsilon(epsilon), bias(hidden, inputs), coeffs(hidden) {
  validate();
}

void CauchyNetModel::validate() const {
  if (hidden < 1 || inputs < 1) throw ValidationError("model needs hidden >= 1 and inputs >= 1");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw ValidationError("epsilon must be finite and >= 0");
  }
  if (bias.rows() != hidden || bias.cols() != inputs) {
    throw ValidationError("bias shape does not match hidden x inputs");
  }
  if (coeffs.size() != hidden) throw ValidationError("coeffs length does not match hidden");
}

void CauchyNetModel::gather(std::span<double> out) const {
  const auto b = as_reals(bias.data());
  const auto c = as_reals(std::span<const Complex>(coeffs));
  std::copy(b.begin(), b.end(), out.begin());
  std::copy(c.begin(), c.end(), out.begin() + static_cast<std::ptrdiff_t>(b.size()));
}

void CauchyNetModel::scatter(std::span<const double> in) {
  auto b = as_reals(bias.data());
  auto c = as_reals(std::span<Complex>(coeffs));
  std::copy_n(in.begin(), b.size(), b.begin());
  std::copy_n(in.begin() + static_cast<std::ptrdiff_t>(b.size()), c.size(), c.begin());
}

double CauchyNetModel::predict(std::span<const double> x) const { return forward(*this, x).y; }

LossValue CauchyNetModel::evaluate_loss(std::span<const double> x, double y_true,
                                        double lambda) const {
  const ForwardOutput fo = forward(*this, x);
  return loss(fo.y, fo.e, y_true, lambda);
}

CauchyNetModel init_xavier_complex(std::size_t hidden, std::size_t inputs, Rng& rng,
                                   double epsilon) {
  CauchyNetModel model(hidden, inputs, epsilon);
  const double sigma = std::sqrt(2.0 / static_cast<double>(inputs + hidden));
  for (Complex& b : model.bias.data()) b = normal_complex(rng, sigma);
  for (Complex& c : model.coeffs) c = normal_complex(rng, sigma);
  return model;
}

CauchyNetModel init_elliptical(std::size_t hidden, std::size_t inputs, Rng& rng,
                               double semi_major, double semi_minor, double epsilon) {
  if (!(semi_major > 0.0) || !(semi_minor > 0.0)) {
    throw ValidationError("ellipse semi-axes must be positive");
  }
  CauchyNetModel model(hidden, inputs, epsilon);
  const double sigma = std::sqrt(2.0 / static_cast<double>(inputs + hidden));
  for (std::size_t k = 0; k < hidden; ++k) {
    const double t = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.5) /
                     static_cast<double>(hidden);
    const Complex point{semi_major * std::cos(t), semi_minor * std::sin(t)};
    for (Complex& b : model.bias.row(k)) b = point;
  }
  for (Complex& c : model.coeffs) c = normal_complex(rng, sigma);
  return model;
}

Complex forward_into(const CauchyNetModel& model, std::span<const double> x,
                     std::span<Complex> hidden_out) {
  if (x.size() != model.inputs) throw LengthMismatch("input length does not match model");
  Complex o{};
  for (std::size_t k = 0; k < model.hidden; ++k) {
    Complex h{1.0, 0.0};
    const auto row = model.bias.row(k);
    for (std::size_t i = 0; i < model.inputs; ++i) {
      h *= shifted_reciprocal(Complex{x[i], 0.0} + row[i], model.epsilon);
    }
    if (!std::isfinite(h.real()) || !std::isfinite(h.imag())) {
      throw NonFinite("hidden activation overflowed");
    }
    hidden_out[k] = h;
    o += model.coeffs[k] * h;
  }
  if (!std::isfinite(o.real()) || !std::isfinite(o.imag())) {
    throw NonFinite("network output is not finite");
  }
  return o;
}

ForwardOutput forward(const CauchyNetModel& model, std::span<const double> x) {
  ForwardOutput fo;
  fo.hidden.resize(model.hidden);
  fo.o = forward_into(model, x, fo.hidden);
  fo.y = fo.o.real();
  fo.e = fo.o.imag();
  return fo;
}

ParameterCount parameter_count(const CauchyNetModel& model) {
  const std::size_t complex_params = model.hidden * (model.inputs + 1);
  return {complex_params, 2 * complex_params};
}

namespace {

json real_parts(std::span<const Complex> v) {
  json out = json::array();
  for (const Complex& c : v) out.push_back(c.real());
  return out;
}

json imag_parts(std::span<const Complex> v) {
  json out = json::array();
  for (const Complex& c : v) out.push_back(c.imag());
  return out;
}

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw SchemaError(std::string("checkpoint is missing field '") + name + "'");
  return *it;
}

double number(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_number()) throw SchemaError(std::string("field '") + name + "' must be a number");
  return v.get<double>();
}

std::size_t count(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_number_unsigned()) {
    throw SchemaError(std::string("field '") + name + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::vector<double> numbers(const json& v, std::size_t expected, const std::string& what) {
  if (!v.is_array() || v.size() != expected) {
    throw SchemaError(what + " must be an array of length " + std::to_string(expected));
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const json& e : v) {
    if (!e.is_number()) throw SchemaError(what + " contains a non-number");
    out.push_back(e.get<double>());
  }
  return out;
}

}  // namespace

void save_checkpoint(const CauchyNetModel& model, const ScalerState& scaler, std::uint64_t seed,
                     const std::filesystem::path& path) {
  json doc;
  doc["version"] = 1;
  doc["model_type"] = "cauchynet";
  doc["h"] = model.hidden;
  doc["m"] = model.inputs;
  doc["epsilon"] = model.epsilon;
  json b_re = json::array();
  json b_im = json::array();
  for (std::size_t k = 0; k < model.hidden; ++k) {
    b_re.push_back(real_parts(model.bias.row(k)));
    b_im.push_back(imag_parts(model.bias.row(k)));
  }
  doc["B_re"] = std::move(b_re);
  doc["B_im"] = std::move(b_im);
  doc["C_re"] = real_parts(model.coeffs);
  doc["C_im"] = imag_parts(model.coeffs);
  doc["scaler"] = {{"min", scaler.min},
                   {"max", scaler.max},
                   {"range_lo", scaler.range_lo},
                   {"range_hi", scaler.range_hi}};
  doc["seed"] = seed;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open checkpoint for writing: " + path.string());
  out << doc.dump(1) << '\n';
  if (!out) throw IoError("failed writing checkpoint: " + path.string());
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open checkpoint: " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("checkpoint is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw SchemaError("checkpoint root must be an object");
  if (count(doc, "version") != 1) throw SchemaError("unsupported checkpoint version");
  if (auto it = doc.find("model_type"); it != doc.end() && *it != "cauchynet") {
    throw SchemaError("checkpoint holds a different model type");
  }

  const std::size_t h = count(doc, "h");
  const std::size_t m = count(doc, "m");
  const double epsilon = number(doc, "epsilon");
  if (h < 1 || m < 1) throw SchemaError("h and m must be >= 1");

  Checkpoint cp;
  try {
    cp.model = CauchyNetModel(h, m, epsilon);
  } catch (const ValidationError& e) {
    throw SchemaError(e.what());
  }
  const json& b_re = field(doc, "B_re");
  const json& b_im = field(doc, "B_im");
  if (!b_re.is_array() || b_re.size() != h || !b_im.is_array() || b_im.size() != h) {
    throw SchemaError("B_re/B_im must have h rows");
  }
  for (std::size_t k = 0; k < h; ++k) {
    const auto re = numbers(b_re[k], m, "B_re row");
    const auto im = numbers(b_im[k], m, "B_im row");
    for (std::size_t i = 0; i < m; ++i) cp.model.bias(k, i) = {re[i], im[i]};
  }
  const auto c_re = numbers(field(doc, "C_re"), h, "C_re");
  const auto c_im = numbers(field(doc, "C_im"), h, "C_im");
  for (std::size_t k = 0; k < h; ++k) cp.model.coeffs[k] = {c_re[k], c_im[k]};

  const json& s = field(doc, "scaler");
  if (!s.is_object()) throw SchemaError("scaler must be an object");
  cp.scaler = {number(s, "min"), number(s, "max"), number(s, "range_lo"), number(s, "range_hi")};
  cp.seed = static_cast<std::uint64_t>(count(doc, "seed"));
  return cp;
}

}  // namespace cauchynet
