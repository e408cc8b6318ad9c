#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "cauchynet/complex_linalg.hpp"
#include "cauchynet/grad.hpp"
#include "cauchynet/scaler.hpp"

namespace cauchynet {

/// Real single-hidden-layer ReLU network: w2 . relu(w1 x + b1) + b2.
struct MlpModel {
  std::size_t hidden = 0;
  std::size_t inputs = 0;
  std::vector<double> w1;  // hidden x inputs, row-major
  std::vector<double> b1;  // hidden
  std::vector<double> w2;  // hidden
  double b2 = 0.0;

  MlpModel() = default;
  MlpModel(std::size_t hidden, std::size_t inputs);

  void validate() const;

  friend bool operator==(const MlpModel&, const MlpModel&) = default;

  // Flat layout: w1, b1, w2, b2. The lambda argument is accepted for the
  // shared harness and ignored (the output is real).
  std::size_t input_dim() const { return inputs; }
  std::size_t parameter_size() const { return hidden * (inputs + 2) + 1; }
  void gather(std::span<double> out) const;
  void scatter(std::span<const double> in);
  double predict(std::span<const double> x) const;
  LossValue evaluate_loss(std::span<const double> x, double y_true, double lambda) const;
  LossValue accumulate_gradient(std::span<const double> x, double y_true, double lambda,
                                std::span<double> grad) const;
};

/// Kaiming-style: w1 ~ N(0, 2/inputs), w2 ~ N(0, 2/hidden), zero biases.
MlpModel init_mlp(std::size_t hidden, std::size_t inputs, Rng& rng);

double mlp_forward(const MlpModel& model, std::span<const double> x);

/// Exact partials of (y - y_true)^2 in the flat layout; the ReLU subgradient
/// at 0 is 0.
std::vector<double> mlp_backward(const MlpModel& model, std::span<const double> x, double y_true);

/// Central-difference oracle for mlp_backward.
std::vector<double> mlp_finite_difference(const MlpModel& model, std::span<const double> x,
                                          double y_true, double step);

void save_mlp_checkpoint(const MlpModel& model, const ScalerState& scaler, std::uint64_t seed,
                         const std::filesystem::path& path);

struct MlpCheckpoint {
  MlpModel model;
  ScalerState scaler;
  std::uint64_t seed = 0;
};

MlpCheckpoint load_mlp_checkpoint(const std::filesystem::path& path);

}  // namespace cauchynet
