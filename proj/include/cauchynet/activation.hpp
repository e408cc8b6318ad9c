#pragma once

#include <span>

#include "cauchynet/complex_linalg.hpp"

namespace cauchynet {

/// Offset added (as a real number) to every component before inversion.
inline constexpr double kDefaultEpsilon = 1e-8;

/// Product of reciprocals prod_i (z_i + epsilon)^-1.
///
/// Throws PoleEncountered when a shifted component is exactly zero and
/// NonFinite when the product overflows. Values near the pole are not
/// clamped.
Complex cauchy_activation(std::span<const Complex> z, double epsilon = kDefaultEpsilon);

/// d/dz of the scalar activation: -(z + epsilon)^-2.
Complex cauchy_activation_derivative(Complex z, double epsilon = kDefaultEpsilon);

/// Partial derivative of the vector activation with respect to component j:
/// -X(z) * (z_j + epsilon)^-1.
Complex cauchy_activation_partial(std::span<const Complex> z, std::size_t j,
                                  double epsilon = kDefaultEpsilon);

/// Reciprocal of z + epsilon with the activation's pole and overflow checks.
Complex shifted_reciprocal(Complex z, double epsilon);

}  // namespace cauchynet
