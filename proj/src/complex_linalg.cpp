#include "cauchynet/complex_linalg.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "cauchynet/errors.hpp"

namespace cauchynet {

Complex checked_complex(double re, double im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw NonFinite("complex component is not finite");
  }
  return {re, im};
}

Complex cmul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

Complex cinv(Complex a) {
  const double norm = a.real() * a.real() + a.imag() * a.imag();
  if (norm == 0.0) {
    if (a.real() == 0.0 && a.imag() == 0.0) throw DivisionByZero("inverse of 0+0i");
    // |a|^2 underflowed; rescale before squaring.
    const double s = std::max(std::abs(a.real()), std::abs(a.imag()));
    const Complex b{a.real() / s, a.imag() / s};
    return cinv(b) / s;
  }
  if (!std::isfinite(norm)) {
    const double s = std::max(std::abs(a.real()), std::abs(a.imag()));
    const Complex b{a.real() / s, a.imag() / s};
    return cinv(b) / s;
  }
  return {a.real() / norm, -a.imag() / norm};
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, Complex fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // 1 - u keeps the logarithm argument in (0, 1].
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % n;
}

std::uint64_t Rng::derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Complex normal_complex(Rng& rng, double sigma) {
  if (!(sigma > 0.0)) throw ValidationError("normal_complex requires sigma > 0");
  const double re = sigma * rng.normal();
  const double im = sigma * rng.normal();
  return {re, im};
}

}  // namespace cauchynet
