#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <vector>

#include "cauchynet/complex_linalg.hpp"

namespace cauchynet {

/// One closed contour: nodes zeta_j and the complex arc increments d zeta_j
/// used by the quadrature rule.
struct Contour {
  ComplexVector nodes;
  ComplexVector increments;
};

/// Tensor-product boundary: one contour per input dimension.
struct BoundaryMesh {
  std::vector<Contour> dims;

  std::size_t dim() const { return dims.size(); }
};

/// Finite sum sum_k weights[k] * K(points.row(k), x).
struct KernelExpansion {
  ComplexMatrix points;   // count x N
  ComplexVector weights;  // count

  std::size_t size() const { return weights.size(); }
  std::size_t dim() const { return points.cols(); }
};

/// K(xi, x) = prod_i 1/(xi_i - x_i). Throws PoleEncountered on a zero factor.
Complex cauchy_kernel(std::span<const Complex> xi, std::span<const double> x);

/// Nodes center + a cos(t_j) + i b sin(t_j) at t_j = 2 pi j / nodes with
/// trapezoidal increments zeta'(t_j) * 2 pi / nodes.
BoundaryMesh ellipse_mesh(double semi_major, double semi_minor, Complex center,
                          std::size_t nodes);

/// Concatenates the dimensions of several meshes into one product mesh.
BoundaryMesh product_mesh(std::span<const BoundaryMesh> factors);

using BoundaryFunction = std::function<Complex(std::span<const Complex>)>;

/// Discretized Cauchy integral: points are the tensor-product nodes and
/// weights f(zeta) * prod_i d zeta_i / (2 pi i)^N.
KernelExpansion quadrature_expansion(const BoundaryFunction& f, const BoundaryMesh& mesh);

Complex evaluate_expansion(const KernelExpansion& expansion, std::span<const double> x);

struct KernelSample {
  std::vector<double> x;
  Complex value;
};

inline constexpr double kDefaultRidge = 1e-16;

/// Weights minimizing sum_j |sum_k theta_k K(xi_k, x_j) - f_j|^2 + ridge |theta|^2
/// for fixed points, solved as the augmented least-squares system
/// [K; sqrt(ridge) I] theta = [f; 0] by column-pivoting QR.
/// Throws SingularSystem when that system is rank deficient.
KernelExpansion fit_expansion_least_squares(std::span<const KernelSample> samples,
                                            const ComplexMatrix& points,
                                            double ridge = kDefaultRidge);

/// JSON with xi_re, xi_im (count x N), theta_re, theta_im.
void save_expansion(const KernelExpansion& expansion, const std::filesystem::path& path);
KernelExpansion load_expansion(const std::filesystem::path& path);

}  // namespace cauchynet
