#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cauchynet/baseline.hpp"
#include "cauchynet/config.hpp"
#include "cauchynet/data.hpp"
#include "cauchynet/model.hpp"
#include "cauchynet/optim.hpp"

namespace cauchynet {

struct MetricsReport {
  double mse = 0.0;
  double mae = 0.0;
  std::vector<double> abs_errors;
  std::size_t complex_params = 0;
  std::size_t real_params = 0;
  double wall_ms = 0.0;
  std::vector<std::string> notes;
};

/// Throws LengthMismatch on unequal or empty inputs.
double metric_mse(std::span<const double> preds, std::span<const double> truths);
double metric_mae(std::span<const double> preds, std::span<const double> truths);

/// Dataset in model (scaled) units plus the scaler that maps back.
struct PreparedData {
  SplitDataset data;  // targets scaled
  SplitDataset raw;   // same samples, original targets
  ScalerState scaler;
  std::optional<MissingMask> mask;
};

/// Builds the dataset an experiment spec describes. Sampling, splitting and
/// model initialisation draw from independent streams of the spec seed.
PreparedData build_dataset(const ExperimentSpec& spec);

using AnyModel = std::variant<CauchyNetModel, MlpModel>;

AnyModel init_model(const ExperimentSpec& spec, std::size_t inputs);

struct PredictionRow {
  std::string split;
  std::vector<double> x;
  double y_true = 0.0;
  double y_pred = 0.0;
  double e_pred = 0.0;
};

/// Predictions for every split in original target units.
std::vector<PredictionRow> predict_all(const AnyModel& model, const PreparedData& prepared);

/// Metrics over the test rows (the hidden region for masked experiments).
MetricsReport evaluate_predictions(const AnyModel& model, std::span<const PredictionRow> rows);

/// Called at snapshot epochs with the test-set MSE in original units.
using SnapshotObserver = std::function<void(std::size_t epoch, double test_mse)>;

struct RunOptions {
  bool write_files = true;
  SnapshotObserver on_snapshot;
};

struct ExperimentResult {
  ExperimentSpec spec;
  PreparedData prepared;
  AnyModel model;
  TrainLog log;
  std::vector<PredictionRow> predictions;
  MetricsReport metrics;
  std::vector<std::filesystem::path> files;
};

/// Builds data, trains, evaluates and (optionally) writes trainlog.csv,
/// predictions.csv, metrics.csv, checkpoint.json, signed_error.csv for masked
/// runs, and manifest.json into spec.output_dir. On divergence the partial
/// outputs are written with status "partial" and TrainingDiverged propagates.
ExperimentResult run_experiment(const ExperimentSpec& spec, const RunOptions& options = {});

/// Loads a checkpoint (either model type) and evaluates it on the dataset the
/// spec describes, writing predictions.csv and metrics.csv when out is set.
MetricsReport evaluate_checkpoint(const ExperimentSpec& spec,
                                  const std::filesystem::path& checkpoint,
                                  const std::optional<std::filesystem::path>& out);

struct AblationRow {
  double lambda = 0.0;
  std::uint64_t seed = 0;
  std::size_t epoch = 0;
  double test_mse = 0.0;
};

/// One full run per lambda with the shared seed. Writes ablation.csv
/// (lambda,seed,epoch,test_mse) plus a run directory per lambda.
std::vector<AblationRow> run_lambda_ablation(const ExperimentSpec& base,
                                             const std::vector<double>& lambdas,
                                             std::size_t threads = 1);

struct GridCell {
  std::size_t hidden = 0;
  std::size_t n = 0;
  double lr = 0.0;
  double wd = 0.0;
  double test_mse = 0.0;
  std::string note;
};

/// Cross-product sweep. A failing cell yields test_mse = NaN with a note and
/// the sweep continues. Cells run on up to `threads` workers; results come
/// back in axis order. Writes sweep_<grid>.csv (h,n,lr,wd,test_mse,note).
std::vector<GridCell> run_sensitivity_grid(const ExperimentSpec& base, const SweepGrid& grid,
                                           std::size_t threads = 1);

struct KernelDemoSpec {
  std::string target = "z2";  // one | z2 | exp | inv2
  double semi_major = 2.0;
  double semi_minor = 1.0;
  std::complex<double> center{0.0, 0.0};
  std::vector<std::size_t> nodes{16, 32, 64, 128};
  double lo = -1.0;
  double hi = 1.0;
  std::size_t grid = 201;
};

struct KernelDemoRow {
  std::size_t nodes = 0;
  double sup_error = 0.0;
};

/// Quadrature expansions of a registered holomorphic target on an ellipse,
/// with the sup error against the analytic value over an interior grid.
std::vector<KernelDemoRow> run_kernel_demo(const KernelDemoSpec& spec);

void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::string sha256_hex(const std::string& content);

/// Removes the wall_ms column from trainlog CSV text (the only
/// non-deterministic output column).
std::string strip_wall_ms(const std::string& trainlog_csv);

}  // namespace cauchynet
