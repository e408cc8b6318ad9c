#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>

#include "cauchynet/activation.hpp"
#include "cauchynet/complex_linalg.hpp"
#include "cauchynet/grad.hpp"
#include "cauchynet/scaler.hpp"

namespace cauchynet {

/// Single-hidden-layer network with hidden units
///   h_k = prod_i (x_i + bias(k, i) + epsilon)^-1
/// and complex output o = sum_k coeffs[k] * h_k.
///
/// A pole-at-b form (b - x)^-1 is the same family with the bias negated;
/// this type stores the x + bias convention throughout.
struct CauchyNetModel {
  std::size_t hidden = 0;
  std::size_t inputs = 0;
  double epsilon = kDefaultEpsilon;
  ComplexMatrix bias;     // hidden x inputs
  ComplexVector coeffs;   // hidden

  CauchyNetModel() = default;
  CauchyNetModel(std::size_t hidden, std::size_t inputs, double epsilon = kDefaultEpsilon);

  /// Throws ValidationError when shapes or epsilon are inconsistent.
  void validate() const;

  friend bool operator==(const CauchyNetModel&, const CauchyNetModel&) = default;

  // Flat parameter-vector access used by the shared training harness. The
  // layout is bias (row-major, re/im interleaved) followed by coeffs.
  std::size_t input_dim() const { return inputs; }
  std::size_t parameter_size() const { return 2 * hidden * (inputs + 1); }
  void gather(std::span<double> out) const;
  void scatter(std::span<const double> in);
  double predict(std::span<const double> x) const;
  LossValue evaluate_loss(std::span<const double> x, double y_true, double lambda) const;
  /// Adds this sample's loss gradient into grad (flat layout above).
  LossValue accumulate_gradient(std::span<const double> x, double y_true, double lambda,
                                std::span<double> grad) const;
};

struct ForwardOutput {
  double y = 0.0;
  double e = 0.0;
  Complex o;
  ComplexVector hidden;
};

struct ParameterCount {
  std::size_t complex_params = 0;
  std::size_t real_params = 0;
};

/// Every real and imaginary component of bias and coeffs drawn i.i.d. from
/// N(0, 2/(inputs + hidden)).
CauchyNetModel init_xavier_complex(std::size_t hidden, std::size_t inputs, Rng& rng,
                                   double epsilon = kDefaultEpsilon);

/// Experimental. Row k of bias is placed at angle 2*pi*(k + 1/2)/hidden on the
/// axis-aligned ellipse with the given semi-axes (same point in every input
/// column); coeffs use the Xavier variant above.
CauchyNetModel init_elliptical(std::size_t hidden, std::size_t inputs, Rng& rng,
                               double semi_major = 6.0, double semi_minor = 2.0,
                               double epsilon = kDefaultEpsilon);

ForwardOutput forward(const CauchyNetModel& model, std::span<const double> x);

/// Allocation-free forward pass; hidden_out must have model.hidden entries.
Complex forward_into(const CauchyNetModel& model, std::span<const double> x,
                     std::span<Complex> hidden_out);

/// complex_params = hidden * (inputs + 1); real_params is twice that.
ParameterCount parameter_count(const CauchyNetModel& model);

void save_checkpoint(const CauchyNetModel& model, const ScalerState& scaler,
                     std::uint64_t seed, const std::filesystem::path& path);

struct Checkpoint {
  CauchyNetModel model;
  ScalerState scaler;
  std::uint64_t seed = 0;
};

/// Throws IoError when the file cannot be read and SchemaError when the
/// document is malformed (bad version, missing field, shape mismatch).
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace cauchynet
