#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numbers>

#include "cauchynet/errors.hpp"
#include "cauchynet/experiment.hpp"
#include "cauchynet/kernel.hpp"

using namespace cauchynet;

namespace {

double sup_error(const KernelExpansion& e, const std::function<double(double)>& f, double lo,
                 double hi, int n = 201) {
  double worst = 0;
  for (int j = 0; j < n; ++j) {
    const double x = lo + (hi - lo) * j / (n - 1);
    const double xs[] = {x};
    worst = std::max(worst, std::abs(evaluate_expansion(e, xs) - f(x)));
  }
  return worst;
}

BoundaryFunction scalar(std::function<Complex(Complex)> f) {
  return [f](std::span<const Complex> z) { return f(z[0]); };
}

}  // namespace

TEST_CASE("cauchy kernel values") {
  const std::vector<Complex> a{{2, 0}};
  const std::vector<double> one{1.0};
  CHECK(cauchy_kernel(a, one) == Complex(1, 0));
  const std::vector<Complex> b{{0, 1}, {0, 2}};
  const std::vector<double> zeros{0.0, 0.0};
  CHECK(cauchy_kernel(b, zeros) == Complex(-0.5, 0));
  const std::vector<Complex> c{{0, 1}};
  const std::vector<double> zero{0.0};
  CHECK(cauchy_kernel(c, zero) == Complex(0, -1));
  const std::vector<Complex> p{{1, 0}};
  CHECK_THROWS_AS(cauchy_kernel(p, one), PoleEncountered);
}

TEST_CASE("ellipse mesh") {
  const BoundaryMesh unit = ellipse_mesh(1, 1, {}, 4);
  REQUIRE(unit.dim() == 1);
  const auto& n = unit.dims[0].nodes;
  CHECK(std::abs(n[0] - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(n[1] - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(n[2] - Complex(-1, 0)) < 1e-15);
  CHECK(std::abs(n[3] - Complex(0, -1)) < 1e-15);

  const BoundaryMesh e = ellipse_mesh(6, 2, {}, 64);
  Complex sum{};
  for (const Complex& z : e.dims[0].nodes) {
    const double u = z.real() / 6, v = z.imag() / 2;
    CHECK(std::abs(u * u + v * v - 1) < 1e-12);
  }
  for (const Complex& d : e.dims[0].increments) sum += d;
  CHECK(std::abs(sum) < 1e-12);

  CHECK_THROWS_AS(ellipse_mesh(1, 1, {}, 3), ValidationError);
  CHECK_THROWS_AS(ellipse_mesh(0, 1, {}, 8), ValidationError);
}

TEST_CASE("quadrature reproduces analytic values") {
  // Constant on the unit circle, at the centre.
  for (std::size_t nodes : {16, 32, 64}) {
    const auto e = quadrature_expansion(scalar([](Complex) { return Complex(1, 0); }),
                                        ellipse_mesh(1, 1, {}, nodes));
    const double x[] = {0.0};
    CHECK(std::abs(evaluate_expansion(e, x) - 1.0) < 1e-12);
  }
  {
    const auto e = quadrature_expansion(scalar([](Complex z) { return z * z; }),
                                        ellipse_mesh(2, 1, {}, 128));
    const double x[] = {0.5};
    CHECK(std::abs(evaluate_expansion(e, x) - 0.25) < 1e-8);
  }
  {
    const auto e = quadrature_expansion(scalar([](Complex z) { return std::exp(z); }),
                                        ellipse_mesh(3, 3, {}, 256));
    const double x[] = {1.0};
    CHECK(std::abs(evaluate_expansion(e, x) - std::numbers::e) < 1e-8);
  }
}

TEST_CASE("z squared converges as nodes double") {
  double prev = INFINITY;
  for (std::size_t nodes : {16, 32, 64, 128}) {
    const auto e = quadrature_expansion(scalar([](Complex z) { return z * z; }),
                                        ellipse_mesh(2, 1, {}, nodes));
    const double err = sup_error(e, [](double x) { return x * x; }, -1, 1);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 1e-8);
}

TEST_CASE("two-dimensional product mesh") {
  const BoundaryMesh f[] = {ellipse_mesh(2, 1, {}, 48), ellipse_mesh(2, 1, {}, 48)};
  const BoundaryMesh mesh = product_mesh(f);
  CHECK(mesh.dim() == 2);
  const auto e = quadrature_expansion(
      [](std::span<const Complex> z) { return z[0] * z[1] + z[1]; }, mesh);
  CHECK(e.size() == 48 * 48);
  const double x[] = {0.3, -0.6};
  CHECK(std::abs(evaluate_expansion(e, x) - Complex(0.3 * -0.6 - 0.6, 0)) < 1e-9);
}

TEST_CASE("evaluate_expansion basics and linearity") {
  KernelExpansion empty;
  empty.points = ComplexMatrix(0, 1);
  const double x[] = {0.2};
  CHECK(evaluate_expansion(empty, x) == Complex(0, 0));

  KernelExpansion single;
  single.points = ComplexMatrix(1, 1, {2, 0});
  single.weights = {1.0};
  const double one[] = {1.0};
  CHECK(evaluate_expansion(single, one) == Complex(1, 0));

  Rng rng(5);
  const auto nodes = ellipse_mesh(2, 1, {}, 16).dims[0].nodes;
  KernelExpansion a, b, sum;
  a.points = ComplexMatrix(16, 1);
  for (int k = 0; k < 16; ++k) a.points(k, 0) = nodes[k];
  b.points = sum.points = a.points;
  for (int k = 0; k < 16; ++k) {
    a.weights.push_back(normal_complex(rng, 1));
    b.weights.push_back(normal_complex(rng, 1));
    sum.weights.push_back(2.0 * a.weights.back() - 3.0 * b.weights.back());
  }
  for (double xv : {-0.9, 0.0, 0.7}) {
    const double xs[] = {xv};
    const Complex lhs = evaluate_expansion(sum, xs);
    const Complex rhs = 2.0 * evaluate_expansion(a, xs) - 3.0 * evaluate_expansion(b, xs);
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("kernel is bounded by the contour distance") {
  const auto mesh = ellipse_mesh(2, 1, {}, 64);
  // Distance from [-1, 1] to the a=2, b=1 ellipse is attained on the real axis at x = +-1
  // or in the interior of the arc; sample the ellipse densely for a lower bound.
  double dist = INFINITY;
  for (int j = 0; j < 20000; ++j) {
    const double t = 2 * std::numbers::pi * j / 20000;
    const Complex z{2 * std::cos(t), std::sin(t)};
    for (int i = 0; i <= 200; ++i) dist = std::min(dist, std::abs(z - Complex(-1 + i * 0.01, 0)));
  }
  for (const Complex& xi : mesh.dims[0].nodes) {
    for (int i = 0; i <= 200; ++i) {
      const double x[] = {-1 + i * 0.01};
      const Complex k[] = {xi};
      CHECK(std::abs(cauchy_kernel(k, x)) <= 1.0 / dist + 1e-12);
    }
  }
}

TEST_CASE("least squares fits") {
  {
    const std::vector<KernelSample> one{{{0.5}, {3.0, 0.0}}};
    ComplexMatrix p(1, 1, {2.0, 1.0});
    const auto e = fit_expansion_least_squares(one, p, 0.0);
    const double x[] = {0.5};
    const Complex k[] = {{2.0, 1.0}};
    CHECK(std::abs(e.weights[0] - Complex(3.0, 0) / cauchy_kernel(k, x)) < 1e-14);
  }
  auto fit = [](const std::function<double(double)>& f, const BoundaryMesh& mesh) {
    std::vector<KernelSample> samples;
    for (int j = 0; j < 64; ++j) {
      const double x = -1 + 2.0 * j / 63;
      samples.push_back({{x}, {f(x), 0.0}});
    }
    const auto& nodes = mesh.dims[0].nodes;
    ComplexMatrix p(nodes.size(), 1);
    for (std::size_t k = 0; k < nodes.size(); ++k) p(k, 0) = nodes[k];
    return fit_expansion_least_squares(samples, p);
  };
  const auto inv = [](double x) { return 1.0 / (2.0 - x); };
  CHECK(sup_error(fit(inv, ellipse_mesh(3, 3, {}, 32)), inv, -1, 1, 1001) < 1e-6);
  const auto s3 = [](double x) { return std::sin(3 * x); };
  CHECK(sup_error(fit(s3, ellipse_mesh(2, 1, {}, 64)), s3, -1, 1, 1001) < 1e-4);
}

TEST_CASE("least squares rejects rank deficiency") {
  const std::vector<KernelSample> one{{{0.5}, {1.0, 0.0}}};
  ComplexMatrix p(2, 1);
  p(0, 0) = {2, 0};
  p(1, 0) = {3, 0};
  CHECK_THROWS_AS(fit_expansion_least_squares(one, p, 0.0), SingularSystem);
}

TEST_CASE("expansion file round trip") {
  const auto e = quadrature_expansion(scalar([](Complex z) { return z; }), ellipse_mesh(2, 1, {}, 8));
  const auto path = std::filesystem::temp_directory_path() / "cauchynet_expansion.json";
  save_expansion(e, path);
  const auto back = load_expansion(path);
  CHECK(back.points == e.points);
  CHECK(back.weights == e.weights);
}

TEST_CASE("kernel demo") {
  KernelDemoSpec spec;
  const auto rows = run_kernel_demo(spec);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].sup_error < rows[i - 1].sup_error);
  CHECK(rows.back().sup_error < 1e-8);

  spec.target = "one";
  spec.nodes = {16, 64};
  const auto ones = run_kernel_demo(spec);
  // Not exact off-centre on an ellipse; spectral convergence still applies.
  CHECK(ones[0].sup_error < 1e-3);
  CHECK(ones[1].sup_error < 1e-12);

  spec.nodes = {4};
  CHECK(run_kernel_demo(spec).size() == 1);

  spec.target = "inv2";
  spec.semi_major = 1.5;
  spec.semi_minor = 1.0;
  spec.nodes = {64};
  CHECK(run_kernel_demo(spec)[0].sup_error < 1e-6);
  spec.semi_major = 3;
  CHECK_THROWS_AS(run_kernel_demo(spec), ValidationError);
  spec.target = "sqrt";
  CHECK_THROWS_AS(run_kernel_demo(spec), ValidationError);
}
