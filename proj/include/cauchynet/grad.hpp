#pragma once

#include <span>

#include "cauchynet/complex_linalg.hpp"

namespace cauchynet {

struct CauchyNetModel;
struct ForwardOutput;

/// Squared fit error plus the imaginary-part penalty lambda * e^2.
struct LossValue {
  double total = 0.0;
  double fit = 0.0;
  double imag_penalty = 0.0;
};

/// Real-parameter partials of the loss. Entry (k, i) of d_bias packs
/// dL/dRe(bias(k,i)) + i * dL/dIm(bias(k,i)); d_coeffs is packed the same way.
struct GradientSet {
  ComplexMatrix d_bias;
  ComplexVector d_coeffs;

  GradientSet() = default;
  GradientSet(std::size_t hidden, std::size_t inputs)
      : d_bias(hidden, inputs), d_coeffs(hidden) {}

  /// Same flat layout as CauchyNetModel::gather.
  std::vector<double> flatten() const;
  static GradientSet unflatten(std::size_t hidden, std::size_t inputs,
                               std::span<const double> flat);
};

LossValue loss(double y, double e, double y_true, double lambda);

/// Exact partials of the loss with respect to every real and imaginary
/// parameter component. fo must come from forward() on the same model and x.
GradientSet backward(const CauchyNetModel& model, const ForwardOutput& fo,
                     std::span<const double> x, double y_true, double lambda);

/// Central differences of the total loss over every real parameter
/// component. Test oracle for backward(); step must be positive.
GradientSet finite_difference_gradients(const CauchyNetModel& model, std::span<const double> x,
                                        double y_true, double lambda, double step);

}  // namespace cauchynet
