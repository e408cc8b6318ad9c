#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace cauchynet {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Builds a complex number, rejecting NaN or infinite components.
Complex checked_complex(double re, double im);

Complex cmul(Complex a, Complex b);

/// 1/a computed as conj(a)/|a|^2. Throws DivisionByZero when a == 0.
Complex cinv(Complex a);

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols, Complex fill = {});

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Complex> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Complex> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::span<Complex> data() { return data_; }
  std::span<const Complex> data() const { return data_; }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Views a run of complex numbers as interleaved (re, im) doubles. The
/// standard guarantees std::complex<double> is layout-compatible with
/// double[2].
inline std::span<double> as_reals(std::span<Complex> values) {
  return {reinterpret_cast<double*>(values.data()), values.size() * 2};
}
inline std::span<const double> as_reals(std::span<const Complex> values) {
  return {reinterpret_cast<const double*>(values.data()), values.size() * 2};
}

/// Seedable generator. The engine is std::mt19937_64, whose output sequence
/// is fixed by the standard; the distribution transforms below are written
/// out explicitly so that streams do not depend on the standard library's
/// unspecified distribution algorithms:
///   uniform()  = (next() >> 11) * 2^-53
///   normal()   = Box-Muller on two uniforms, cosine branch first, sine
///                branch cached for the next call
///   below(n)   = rejection sampling on next() against the largest multiple
///                of n
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  double uniform();
  double uniform(double lo, double hi);
  double normal();
  std::uint64_t below(std::uint64_t n);

  /// Fisher-Yates, swapping from the back.
  template <typename T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

  /// Mixes a base seed with a stream index (SplitMix64 finalizer), giving
  /// independent sub-seeds such as one per epoch.
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// re and im drawn independently from N(0, sigma^2).
Complex normal_complex(Rng& rng, double sigma);

}  // namespace cauchynet
