#include "cauchynet/grad.hpp"

#include <cmath>

#include "cauchynet/errors.hpp"
#include "cauchynet/model.hpp"

namespace cauchynet {

// For a parameter theta on which o depends holomorphically with
// do/dtheta = g, the real partials of L(Re o, Im o) are
//   dL/dRe(theta) = Re(conj(g) * delta),  dL/dIm(theta) = Im(conj(g) * delta)
// with delta = dL/dy + i dL/de. GradientSet packs exactly conj(g) * delta.

std::vector<double> GradientSet::flatten() const {
  std::vector<double> flat(2 * (d_bias.size() + d_coeffs.size()));
  const auto b = as_reals(d_bias.data());
  const auto c = as_reals(std::span<const Complex>(d_coeffs));
  std::copy(b.begin(), b.end(), flat.begin());
  std::copy(c.begin(), c.end(), flat.begin() + static_cast<std::ptrdiff_t>(b.size()));
  return flat;
}

GradientSet GradientSet::unflatten(std::size_t hidden, std::size_t inputs,
                                   std::span<const double> flat) {
  GradientSet g(hidden, inputs);
  if (flat.size() != 2 * hidden * (inputs + 1)) throw LengthMismatch("flat gradient size");
  auto b = as_reals(g.d_bias.data());
  auto c = as_reals(std::span<Complex>(g.d_coeffs));
  std::copy_n(flat.begin(), b.size(), b.begin());
  std::copy_n(flat.begin() + static_cast<std::ptrdiff_t>(b.size()), c.size(), c.begin());
  return g;
}

LossValue loss(double y, double e, double y_true, double lambda) {
  if (!(lambda >= 0.0)) throw ValidationError("lambda must be >= 0");
  const double r = y - y_true;
  LossValue v;
  v.fit = r * r;
  v.imag_penalty = lambda * e * e;
  v.total = v.fit + v.imag_penalty;
  return v;
}

namespace {

void require_finite(double v) {
  if (!std::isfinite(v)) throw NonFinite("gradient is not finite");
}

// Writes packed partials for one sample into flat (bias block then coeffs),
// accumulating.
void accumulate_packed(const CauchyNetModel& model, std::span<const Complex> hidden,
                       std::span<const double> x, Complex delta, std::span<double> flat) {
  const std::size_t m = model.inputs;
  const std::size_t coeff_offset = 2 * model.hidden * m;
  for (std::size_t k = 0; k < model.hidden; ++k) {
    const Complex hk = hidden[k];
    const Complex dc = std::conj(hk) * delta;
    flat[coeff_offset + 2 * k] += dc.real();
    flat[coeff_offset + 2 * k + 1] += dc.imag();

    const Complex upstream = -model.coeffs[k] * hk;
    const auto row = model.bias.row(k);
    for (std::size_t i = 0; i < m; ++i) {
      const Complex r = shifted_reciprocal(Complex{x[i], 0.0} + row[i], model.epsilon);
      const Complex db = std::conj(upstream * r) * delta;
      flat[2 * (k * m + i)] += db.real();
      flat[2 * (k * m + i) + 1] += db.imag();
    }
  }
}

}  // namespace

GradientSet backward(const CauchyNetModel& model, const ForwardOutput& fo,
                     std::span<const double> x, double y_true, double lambda) {
  if (x.size() != model.inputs) throw LengthMismatch("input length does not match model");
  if (fo.hidden.size() != model.hidden) throw LengthMismatch("forward output hidden size");
  if (!(lambda >= 0.0)) throw ValidationError("lambda must be >= 0");
  const Complex delta{2.0 * (fo.y - y_true), 2.0 * lambda * fo.e};
  std::vector<double> flat(model.parameter_size(), 0.0);
  accumulate_packed(model, fo.hidden, x, delta, flat);
  for (double v : flat) require_finite(v);
  return GradientSet::unflatten(model.hidden, model.inputs, flat);
}

LossValue CauchyNetModel::accumulate_gradient(std::span<const double> x, double y_true,
                                              double lambda, std::span<double> grad) const {
  std::vector<Complex> hidden_values(hidden);
  const Complex o = forward_into(*this, x, hidden_values);
  const LossValue value = loss(o.real(), o.imag(), y_true, lambda);
  const Complex delta{2.0 * (o.real() - y_true), 2.0 * lambda * o.imag()};
  accumulate_packed(*this, hidden_values, x, delta, grad);
  return value;
}

GradientSet finite_difference_gradients(const CauchyNetModel& model, std::span<const double> x,
                                        double y_true, double lambda, double step) {
  if (!(step > 0.0)) throw ValidationError("finite-difference step must be > 0");
  CauchyNetModel probe = model;
  std::vector<double> params(model.parameter_size());
  model.gather(params);
  std::vector<double> flat(params.size());
  for (std::size_t p = 0; p < params.size(); ++p) {
    const double saved = params[p];
    params[p] = saved + step;
    probe.scatter(params);
    const double up = probe.evaluate_loss(x, y_true, lambda).total;
    params[p] = saved - step;
    probe.scatter(params);
    const double down = probe.evaluate_loss(x, y_true, lambda).total;
    params[p] = saved;
    flat[p] = (up - down) / (2.0 * step);
  }
  return GradientSet::unflatten(model.hidden, model.inputs, flat);
}

}  // namespace cauchynet
