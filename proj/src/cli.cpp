#include "cauchynet/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cauchynet/config.hpp"
#include "cauchynet/data.hpp"
#include "cauchynet/errors.hpp"
#include "cauchynet/experiment.hpp"
#include "cauchynet/format.hpp"

namespace cauchynet::cli {

namespace {

struct SpecOptions {
  std::string preset;
  std::string config;
  std::vector<std::string> sets;
  std::string out;
};

void add_spec_options(CLI::App* cmd, SpecOptions& o, const std::string& default_preset) {
  o.preset = default_preset;
  cmd->add_option("--preset", o.preset, "named recipe (see list-experiments)")
      ->capture_default_str();
  cmd->add_option("--config", o.config, "key = value config file");
  cmd->add_option("--set", o.sets, "key=value override, repeatable");
  cmd->add_option("--out", o.out, "output directory");
}

// preset, then config file, then CAUCHYNET_SEED, then --set.
ExperimentSpec resolve_spec(const SpecOptions& o) {
  ExperimentSpec spec = o.preset.empty() ? ExperimentSpec{} : preset(o.preset);
  if (!o.config.empty()) apply_config(spec, o.config);
  if (const char* seed = std::getenv("CAUCHYNET_SEED"); seed && *seed) {
    try {
      apply_setting(spec, "seed", seed);
    } catch (const ValidationError& e) {
      throw ValidationError(std::string("CAUCHYNET_SEED: ") + e.what());
    }
  }
  for (const std::string& s : o.sets) apply_override(spec, s);
  if (!o.out.empty()) spec.output_dir = o.out;
  validate(spec);
  return spec;
}

void print_metrics(std::ostream& out, const ExperimentSpec& spec, const MetricsReport& m) {
  out << spec.name << " (" << spec.model << ", seed " << spec.train.seed << ")\n";
  out << "  test mse " << format_double(m.mse) << "  mae " << format_double(m.mae) << "  n "
      << m.abs_errors.size() << '\n';
  if (m.complex_params) out << "  params " << m.complex_params << " complex / ";
  else out << "  params ";
  out << m.real_params << " real\n";
  for (const std::string& note : m.notes) out << "  note: " << note << '\n';
}

std::vector<std::size_t> parse_counts(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    if (!parse_double(item, v) || v < 1.0 || v != std::floor(v)) {
      throw ValidationError("bad node count '" + item + "'");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ValidationError*>(&e) || dynamic_cast<const DegenerateRange*>(&e) ||
      dynamic_cast<const NonPositiveValue*>(&e)) {
    return kValidation;
  }
  if (dynamic_cast<const NonFinite*>(&e) || dynamic_cast<const PoleEncountered*>(&e) ||
      dynamic_cast<const DivisionByZero*>(&e) || dynamic_cast<const SingularSystem*>(&e)) {
    return kNumerical;
  }
  if (dynamic_cast<const IoError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
      dynamic_cast<const SchemaError*>(&e) ||
      dynamic_cast<const std::filesystem::filesystem_error*>(&e)) {
    return kIo;
  }
  return kFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"CauchyNet experiments"};
  app.require_subcommand(1);
  std::size_t threads = 1;
  app.add_option("--threads", threads, "worker pool size for sweeps and ablations")
      ->check(CLI::PositiveNumber);

  SpecOptions train_o, eval_o, impute_o, ablate_o, sweep_o;

  auto* train_cmd = app.add_subcommand("train", "train one model and write a run directory");
  add_spec_options(train_cmd, train_o, "exp1");

  auto* eval_cmd = app.add_subcommand("evaluate", "evaluate a checkpoint on a spec's dataset");
  add_spec_options(eval_cmd, eval_o, "exp1");
  std::string checkpoint;
  eval_cmd->add_option("--checkpoint", checkpoint, "checkpoint.json")->required();

  auto* impute_cmd = app.add_subcommand("impute", "train on data with a missing region");
  add_spec_options(impute_cmd, impute_o, "exp2-gap");

  auto* ablate_cmd = app.add_subcommand("ablate-lambda", "one run per imaginary-penalty weight");
  add_spec_options(ablate_cmd, ablate_o, "exp5-lambda");
  std::vector<double> lambdas;
  ablate_cmd->add_option("--lambdas", lambdas, "overrides the spec list")->delimiter(',');

  auto* sweep_cmd = app.add_subcommand("sweep", "hidden size / data size / lr / wd grids");
  add_spec_options(sweep_cmd, sweep_o, "exp5-grid");
  std::vector<std::string> grid_names;
  sweep_cmd->add_option("--grid", grid_names, "grid name(s); default all");

  auto* kernel_cmd = app.add_subcommand("kernel-demo", "Cauchy-kernel quadrature convergence");
  KernelDemoSpec kd;
  std::string nodes_text = "16,32,64,128";
  std::string kernel_out;
  kernel_cmd->add_option("--target", kd.target, "one | z2 | exp | inv2")->capture_default_str();
  kernel_cmd->add_option("--a", kd.semi_major, "semi-major axis")->capture_default_str();
  kernel_cmd->add_option("--b", kd.semi_minor, "semi-minor axis")->capture_default_str();
  kernel_cmd->add_option("--nodes", nodes_text, "comma separated")->capture_default_str();
  kernel_cmd->add_option("--lo", kd.lo)->capture_default_str();
  kernel_cmd->add_option("--hi", kd.hi)->capture_default_str();
  kernel_cmd->add_option("--grid", kd.grid)->capture_default_str();
  kernel_cmd->add_option("--out", kernel_out, "CSV path (default stdout)");

  auto* decomp_cmd = app.add_subcommand("decompose", "multiplicative seasonal decomposition");
  std::string csv_path, column = "y", decomp_out;
  std::size_t period = 12;
  decomp_cmd->add_option("--csv", csv_path)->required();
  decomp_cmd->add_option("--column", column)->capture_default_str();
  decomp_cmd->add_option("--period", period)->capture_default_str();
  decomp_cmd->add_option("--out", decomp_out, "CSV path (default stdout)");

  auto* list_cmd = app.add_subcommand("list-experiments", "list presets");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }

  try {
    if (list_cmd->parsed()) {
      for (const PresetInfo& p : preset_catalog()) out << p.name << "\t" << p.description << '\n';
      return kOk;
    }

    if (train_cmd->parsed() || impute_cmd->parsed()) {
      const bool impute = impute_cmd->parsed();
      ExperimentSpec spec = resolve_spec(impute ? impute_o : train_o);
      if (impute && spec.split != "masked") {
        throw ValidationError("impute needs a masked split (set split=masked and mask=...)");
      }
      const ExperimentResult r = run_experiment(spec);
      print_metrics(out, spec, r.metrics);
      if (impute) {
        double mean = 0.0;
        for (const Sample& s : r.prepared.raw.train) mean += s.y;
        mean /= static_cast<double>(r.prepared.raw.train.size());
        double mae = 0.0;
        for (const Sample& s : r.prepared.raw.test) mae += std::abs(mean - s.y);
        mae /= static_cast<double>(r.prepared.raw.test.size());
        out << "  hidden-region points " << r.prepared.raw.test.size()
            << ", constant-mean predictor mae " << format_double(mae) << '\n';
      }
      out << "  wrote " << spec.output_dir.string() << '\n';
      return kOk;
    }

    if (eval_cmd->parsed()) {
      ExperimentSpec spec = resolve_spec(eval_o);
      std::optional<std::filesystem::path> dest;
      if (!eval_o.out.empty()) dest = spec.output_dir;
      print_metrics(out, spec, evaluate_checkpoint(spec, checkpoint, dest));
      return kOk;
    }

    if (ablate_cmd->parsed()) {
      ExperimentSpec spec = resolve_spec(ablate_o);
      if (ablate_cmd->count("--lambdas")) spec.lambdas = lambdas;
      const auto rows = run_lambda_ablation(spec, spec.lambdas, threads);
      out << "lambda,final_test_mse\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i + 1 == rows.size() || rows[i + 1].lambda != rows[i].lambda) {
          out << format_double(rows[i].lambda) << ',' << format_double(rows[i].test_mse) << '\n';
        }
      }
      out << "wrote " << (spec.output_dir / "ablation.csv").string() << '\n';
      return kOk;
    }

    if (sweep_cmd->parsed()) {
      ExperimentSpec spec = resolve_spec(sweep_o);
      if (spec.grids.empty()) throw ValidationError("spec defines no sweep grid");
      std::vector<SweepGrid> grids;
      if (grid_names.empty()) {
        grids = spec.grids;
      } else {
        for (const std::string& name : grid_names) {
          auto it = std::find_if(spec.grids.begin(), spec.grids.end(),
                                 [&](const SweepGrid& g) { return g.name == name; });
          if (it == spec.grids.end()) throw ValidationError("unknown grid '" + name + "'");
          grids.push_back(*it);
        }
      }
      std::size_t failed = 0, total = 0;
      for (const SweepGrid& g : grids) {
        const auto cells = run_sensitivity_grid(spec, g, threads);
        for (const GridCell& c : cells) {
          ++total;
          if (!std::isfinite(c.test_mse)) ++failed;
        }
        out << g.name << ": " << cells.size() << " cells, wrote "
            << (spec.output_dir / ("sweep_" + g.name + ".csv")).string() << '\n';
      }
      if (failed) out << failed << " of " << total << " cells failed\n";
      if (total > 0 && failed == total) {
        err << "error: every sweep cell failed\n";
        return kNumerical;
      }
      return kOk;
    }

    if (kernel_cmd->parsed()) {
      kd.nodes = parse_counts(nodes_text);
      const auto rows = run_kernel_demo(kd);
      std::ostringstream csv;
      csv << "nodes,sup_error\n";
      for (const KernelDemoRow& r : rows) csv << r.nodes << ',' << format_double(r.sup_error) << '\n';
      if (kernel_out.empty()) out << csv.str();
      else write_file_atomic(kernel_out, csv.str());
      return kOk;
    }

    if (decomp_cmd->parsed()) {
      const auto series = load_series_csv(csv_path, column);
      const Decomposition d = seasonal_decompose_multiplicative(series, period);
      std::ostringstream csv;
      csv << "index,value,trend,seasonal,residual\n";
      for (std::size_t i = 0; i < series.size(); ++i) {
        csv << i << ',' << format_double(series[i]) << ','
            << (d.trend[i] ? format_double(*d.trend[i]) : "") << ','
            << format_double(d.seasonal[i]) << ','
            << (d.residual[i] ? format_double(*d.residual[i]) : "") << '\n';
      }
      if (decomp_out.empty()) out << csv.str();
      else write_file_atomic(decomp_out, csv.str());
      return kOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kFailure;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace cauchynet::cli
