#include "cauchynet/kernel.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include <Eigen/Dense>
#include <json.hpp>

#include "cauchynet/errors.hpp"

namespace cauchynet {

using nlohmann::json;

Complex cauchy_kernel(std::span<const Complex> xi, std::span<const double> x) {
  if (xi.size() != x.size()) throw LengthMismatch("kernel point and input differ in dimension");
  Complex product{1.0, 0.0};
  for (std::size_t i = 0; i < xi.size(); ++i) {
    const Complex d = xi[i] - x[i];
    if (d == Complex{}) throw PoleEncountered("kernel evaluated on a boundary point");
    product *= cinv(d);
  }
  return product;
}

BoundaryMesh ellipse_mesh(double semi_major, double semi_minor, Complex center,
                          std::size_t nodes) {
  if (!(semi_major > 0.0) || !(semi_minor > 0.0)) {
    throw ValidationError("ellipse semi-axes must be positive");
  }
  if (nodes < 4) throw ValidationError("a contour needs at least 4 nodes");
  Contour c;
  c.nodes.reserve(nodes);
  c.increments.reserve(nodes);
  const double dt = 2.0 * std::numbers::pi / static_cast<double>(nodes);
  for (std::size_t j = 0; j < nodes; ++j) {
    const double t = dt * static_cast<double>(j);
    const double cs = std::cos(t);
    const double sn = std::sin(t);
    c.nodes.push_back(center + Complex{semi_major * cs, semi_minor * sn});
    c.increments.push_back(Complex{-semi_major * sn, semi_minor * cs} * dt);
  }
  return BoundaryMesh{{std::move(c)}};
}

BoundaryMesh product_mesh(std::span<const BoundaryMesh> factors) {
  BoundaryMesh out;
  for (const BoundaryMesh& f : factors) {
    out.dims.insert(out.dims.end(), f.dims.begin(), f.dims.end());
  }
  return out;
}

KernelExpansion quadrature_expansion(const BoundaryFunction& f, const BoundaryMesh& mesh) {
  const std::size_t n = mesh.dim();
  if (n == 0) throw ValidationError("mesh has no dimensions");
  std::size_t total = 1;
  for (const Contour& c : mesh.dims) {
    if (c.nodes.size() != c.increments.size() || c.nodes.empty()) {
      throw ValidationError("contour nodes and increments differ in length");
    }
    total *= c.nodes.size();
  }

  const Complex two_pi_i{0.0, 2.0 * std::numbers::pi};
  Complex scale{1.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) scale /= two_pi_i;

  KernelExpansion out{ComplexMatrix(total, n), ComplexVector(total)};
  std::vector<std::size_t> index(n, 0);
  ComplexVector zeta(n);
  for (std::size_t k = 0; k < total; ++k) {
    Complex measure{1.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      zeta[i] = mesh.dims[i].nodes[index[i]];
      measure *= mesh.dims[i].increments[index[i]];
      out.points(k, i) = zeta[i];
    }
    out.weights[k] = f(zeta) * measure * scale;
    // Odometer over the tensor-product index, last dimension fastest.
    for (std::size_t i = n; i-- > 0;) {
      if (++index[i] < mesh.dims[i].nodes.size()) break;
      index[i] = 0;
    }
  }
  return out;
}

Complex evaluate_expansion(const KernelExpansion& expansion, std::span<const double> x) {
  Complex sum{};
  for (std::size_t k = 0; k < expansion.size(); ++k) {
    sum += expansion.weights[k] * cauchy_kernel(expansion.points.row(k), x);
  }
  return sum;
}

KernelExpansion fit_expansion_least_squares(std::span<const KernelSample> samples,
                                            const ComplexMatrix& points, double ridge) {
  if (samples.empty()) throw ValidationError("least-squares fit needs at least one sample");
  if (points.rows() == 0) throw ValidationError("least-squares fit needs at least one point");
  if (!(ridge >= 0.0)) throw ValidationError("ridge must be >= 0");
  const auto n_samples = static_cast<Eigen::Index>(samples.size());
  const auto n_points = static_cast<Eigen::Index>(points.rows());
  const Eigen::Index n_rows = n_samples + (ridge > 0.0 ? n_points : 0);

  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n_rows, n_points);
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(n_rows);
  for (Eigen::Index j = 0; j < n_samples; ++j) {
    const KernelSample& s = samples[static_cast<std::size_t>(j)];
    for (Eigen::Index k = 0; k < n_points; ++k) {
      a(j, k) = cauchy_kernel(points.row(static_cast<std::size_t>(k)), s.x);
    }
    b(j) = s.value;
  }
  if (ridge > 0.0) {
    const double root = std::sqrt(ridge);
    for (Eigen::Index k = 0; k < n_points; ++k) a(n_samples + k, k) = root;
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(a);
  if (qr.rank() < n_points) {
    throw SingularSystem("kernel least-squares system is rank deficient (rank " +
                         std::to_string(qr.rank()) + " of " + std::to_string(n_points) + ")");
  }
  const Eigen::VectorXcd theta = qr.solve(b);
  KernelExpansion out{points, ComplexVector(static_cast<std::size_t>(n_points))};
  for (Eigen::Index k = 0; k < n_points; ++k) {
    if (!std::isfinite(theta(k).real()) || !std::isfinite(theta(k).imag())) {
      throw SingularSystem("kernel least-squares weights are not finite");
    }
    out.weights[static_cast<std::size_t>(k)] = theta(k);
  }
  return out;
}

void save_expansion(const KernelExpansion& expansion, const std::filesystem::path& path) {
  json xi_re = json::array();
  json xi_im = json::array();
  for (std::size_t k = 0; k < expansion.size(); ++k) {
    json re = json::array();
    json im = json::array();
    for (const Complex& c : expansion.points.row(k)) {
      re.push_back(c.real());
      im.push_back(c.imag());
    }
    xi_re.push_back(std::move(re));
    xi_im.push_back(std::move(im));
  }
  json theta_re = json::array();
  json theta_im = json::array();
  for (const Complex& w : expansion.weights) {
    theta_re.push_back(w.real());
    theta_im.push_back(w.imag());
  }
  const json doc = {{"version", 1},       {"N", expansion.dim()},   {"xi_re", xi_re},
                    {"xi_im", xi_im},     {"theta_re", theta_re}, {"theta_im", theta_im}};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open expansion for writing: " + path.string());
  out << doc.dump(1) << '\n';
}

KernelExpansion load_expansion(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open expansion: " + path.string());
  try {
    const json doc = json::parse(in);
    const auto n = doc.at("N").get<std::size_t>();
    const json& xi_re = doc.at("xi_re");
    const json& xi_im = doc.at("xi_im");
    const json& th_re = doc.at("theta_re");
    const json& th_im = doc.at("theta_im");
    const std::size_t count = th_re.size();
    if (th_im.size() != count || xi_re.size() != count || xi_im.size() != count) {
      throw SchemaError("expansion arrays differ in length");
    }
    KernelExpansion out{ComplexMatrix(count, n), ComplexVector(count)};
    for (std::size_t k = 0; k < count; ++k) {
      if (xi_re[k].size() != n || xi_im[k].size() != n) {
        throw SchemaError("expansion point has the wrong dimension");
      }
      for (std::size_t i = 0; i < n; ++i) {
        out.points(k, i) = {xi_re[k][i].get<double>(), xi_im[k][i].get<double>()};
      }
      out.weights[k] = {th_re[k].get<double>(), th_im[k].get<double>()};
    }
    return out;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed expansion document: ") + e.what());
  }
}

}  // namespace cauchynet
