#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "cauchynet/optim.hpp"

namespace cauchynet {

/// One cross-product sweep over hidden width, dataset size, learning rate and
/// weight decay.
struct SweepGrid {
  std::string name;
  std::vector<std::size_t> hidden;
  std::vector<std::size_t> sizes;
  std::vector<double> lrs;
  std::vector<double> wds;

  std::size_t cells() const { return hidden.size() * sizes.size() * lrs.size() * wds.size(); }
};

/// Declarative description of one experiment: data generator, split/mask,
/// model and training schedule. Every field is settable from a config file
/// or a --set override through apply_setting().
struct ExperimentSpec {
  int version = 1;
  std::string name = "custom";

  // Data.
  std::string generator = "exp1";
  std::size_t n_points = 300;
  std::string sampling = "grid";  // grid | uniform
  double domain_lo = -1.0;
  double domain_hi = 1.0;
  std::string split = "shuffled";  // shuffled | interleaved | masked | chronological
  std::array<double, 3> fractions{0.5, 0.25, 0.25};
  std::string mask = "none";  // none | turning-points | disk
  double mask_half_width = 0.15;
  double mask_radius = 0.3;
  double visible_train_fraction = 0.6;
  double scaler_lo = 0.0;
  double scaler_hi = 1.0;

  // Time-series input (generator csv-trend).
  std::string csv_path;
  std::string csv_column = "y";
  std::size_t period = 12;
  std::size_t window = 4;

  // Model.
  std::string model = "cauchynet";  // cauchynet | relu_mlp
  std::size_t hidden = 128;
  double epsilon = 1e-8;
  std::string init = "xavier";  // xavier | elliptical
  double ellipse_a = 6.0;
  double ellipse_b = 2.0;

  TrainConfig train;

  // Ablation and sweeps.
  std::vector<double> lambdas{0.1, 0.3, 0.5, 1.0, 1.5};
  std::size_t snapshot_every = 10;
  std::vector<SweepGrid> grids;

  std::filesystem::path output_dir = "runs/custom";
};

/// Registered generator names.
const std::vector<std::string>& generator_names();

struct PresetInfo {
  std::string name;
  std::string description;
};

const std::vector<PresetInfo>& preset_catalog();

/// Throws ValidationError for an unknown preset.
ExperimentSpec preset(const std::string& name);

/// Sets one field from its textual form. Lists are comma separated. Throws
/// ValidationError for unknown keys or unparseable values.
void apply_setting(ExperimentSpec& spec, const std::string& key, const std::string& value);

/// Applies a "key=value" override string.
void apply_override(ExperimentSpec& spec, const std::string& assignment);

/// Reads a config document: one "key = value" per line, '#' starts a comment.
/// A "preset = NAME" line, if present, must come first and seeds the spec.
ExperimentSpec load_config(const std::filesystem::path& path);

/// Applies settings from a config document on top of an existing spec.
void apply_config(ExperimentSpec& spec, const std::filesystem::path& path);

/// Renders a spec in the config format (round-trips through load_config).
std::string dump_config(const ExperimentSpec& spec);

/// Checks every module precondition the spec implies. Throws ValidationError.
void validate(const ExperimentSpec& spec);

}  // namespace cauchynet
