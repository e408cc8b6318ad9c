#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cauchynet/complex_linalg.hpp"
#include "cauchynet/dataset.hpp"
#include "cauchynet/scaler.hpp"

namespace cauchynet {

// Synthetic targets.

/// sin(3x) + 4/((x - 0.5)^2 + 0.01): a rational spike at x = 0.5.
double target_intro_spike(double x);

/// 1/((x+0.6)^2+0.005) - 40 exp(-2(x+0.4)^2) + 50 sign(x) |sin 3x + 0.8|^1.5 sin 10x,
/// with sign(0) = 0.
double target_exp1(double x);

/// sin(2x-4) + 0.5 cos(5x-5) + 0.05/((x-1)^2+0.1) + 0.01/((x+0.5)^2+0.05)
///   - 0.01(x^2 - x^3).
double target_exp2_gap(double x);

/// 3 - x^2 + xy - y^2 - 1/(5 + (x-1)^2).
double target_2d_missing_disk(double x, double y);

/// x^2 - xy + 3y + y^2 + 1/(5 + x^2).
double target_2d_surface(double x, double y);

/// Abscissae in [lo, hi] where a central-difference derivative changes sign
/// between neighbouring grid nodes, refined by bisection on that derivative
/// to 1e-10. grid must be >= 100.
std::vector<double> find_turning_points(const std::function<double(double)>& f, double lo,
                                        double hi, std::size_t grid = 4000);

// Sampling.

/// n evenly spaced points on [lo, hi] including both ends.
std::vector<Sample> grid_samples(const std::function<double(double)>& f, double lo, double hi,
                                 std::size_t n);

/// n points drawn uniformly from [lo, hi]^2.
std::vector<Sample> uniform_samples_2d(const std::function<double(double, double)>& f, double lo,
                                       double hi, std::size_t n, Rng& rng);

// Missing-data masks.

struct IntervalMask {
  std::vector<double> centers;
  double half_width = 0.15;
};

struct DiskMask {
  std::array<double, 2> center{0.0, 0.0};
  double radius = 0.3;
};

using MissingMask = std::variant<IntervalMask, DiskMask>;

/// Geometric membership: |x - c| <= half_width for some center, or
/// |x - center|^2 <= radius^2.
bool mask_contains(const MissingMask& mask, std::span<const double> x);

void validate_mask(const MissingMask& mask);

struct MaskedSamples {
  std::vector<Sample> visible;
  std::vector<Sample> hidden;
};

MaskedSamples apply_mask(std::span<const Sample> samples, const MissingMask& mask);

/// Number of connected components of the masked set along the real line.
std::size_t interval_mask_components(const IntervalMask& mask);

// Splits.

/// Seeded shuffle, then the first round(n*f_train) samples go to train, the
/// next round(n*f_val) to val and the rest to test.
SplitDataset make_split(std::span<const Sample> samples, std::array<double, 3> fractions,
                        Rng& rng);

/// Even-indexed samples (an evenly spaced half of a grid) form the train
/// split; the odd-indexed ones are shuffled and halved into val and test.
SplitDataset make_interleaved_split(std::span<const Sample> samples, Rng& rng);

/// Hidden-region samples become the test split; visible ones are shuffled
/// and divided train/val by train_fraction.
SplitDataset make_masked_split(std::span<const Sample> samples, const MissingMask& mask,
                               double train_fraction, Rng& rng);

/// Contiguous chronological 50/25/25-style split without shuffling.
SplitDataset make_chronological_split(std::span<const Sample> samples,
                                      std::array<double, 3> fractions);

/// Applies the scaler to every target value in place.
void scale_targets(SplitDataset& dataset, const ScalerState& scaler);

/// CSV with columns split,x0[,x1...],y.
void write_dataset_csv(const SplitDataset& dataset, std::ostream& out);

// Seasonal decomposition.

struct Decomposition {
  std::vector<std::optional<double>> trend;
  std::vector<double> seasonal;
  std::vector<std::optional<double>> residual;
  std::size_t period = 0;
};

/// Classical multiplicative decomposition. trend is a centred moving average
/// (2 x period with half-weighted ends for even periods); seasonal is the
/// per-phase mean of series/trend normalised to mean 1; residual is
/// series/(trend * seasonal). Edges where the moving average is undefined
/// are empty. Throws NonPositiveValue for non-positive data.
Decomposition seasonal_decompose_multiplicative(std::span<const double> series,
                                                std::size_t period);

/// Sliding windows over a series: x = series[t - window, t), y = series[t].
std::vector<Sample> lag_window_samples(std::span<const double> series, std::size_t window);

// CSV input.

/// Reads one numeric column from a CSV file with a header row. Throws IoError
/// when the file cannot be read and ParseError for a missing column or an
/// unparseable cell (data rows are numbered from 1 after the header).
std::vector<double> load_series_csv(const std::filesystem::path& path, const std::string& column);

}  // namespace cauchynet
