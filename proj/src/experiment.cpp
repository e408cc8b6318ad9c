#include "cauchynet/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>
#include <openssl/evp.h>

#include "cauchynet/errors.hpp"
#include "cauchynet/format.hpp"
#include "cauchynet/kernel.hpp"

namespace cauchynet {

using nlohmann::json;

namespace {

// Independent seed streams; training shuffles use derive_seed(seed, epoch)
// with small epoch indices, so these sit far above any epoch count.
constexpr std::uint64_t kSampleStream = (1ULL << 40) + 1;
constexpr std::uint64_t kSplitStream = (1ULL << 40) + 2;
constexpr std::uint64_t kInitStream = (1ULL << 40) + 3;

std::function<double(double)> target_1d(const std::string& name) {
  if (name == "intro-spike") return target_intro_spike;
  if (name == "exp1") return target_exp1;
  if (name == "exp2-gap") return target_exp2_gap;
  throw ValidationError("'" + name + "' is not a 1-D generator");
}

std::function<double(double, double)> target_2d(const std::string& name) {
  if (name == "exp2-disk") return target_2d_missing_disk;
  if (name == "exp3-surface") return target_2d_surface;
  throw ValidationError("'" + name + "' is not a 2-D generator");
}

bool is_2d(const std::string& generator) {
  return generator == "exp2-disk" || generator == "exp3-surface";
}

std::vector<double> targets(const std::vector<Sample>& samples) {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const Sample& s : samples) out.push_back(s.y);
  return out;
}

template <typename F>
void parallel_for(std::size_t count, std::size_t threads, F&& fn) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::string label(double v) {
  std::string s = format_double(v);
  std::replace(s.begin(), s.end(), '+', 'p');
  return s;
}

}  // namespace

double metric_mse(std::span<const double> preds, std::span<const double> truths) {
  if (preds.size() != truths.size() || preds.empty()) {
    throw LengthMismatch("metric inputs must be non-empty and of equal length");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    const double r = preds[i] - truths[i];
    sum += r * r;
  }
  return sum / static_cast<double>(preds.size());
}

double metric_mae(std::span<const double> preds, std::span<const double> truths) {
  if (preds.size() != truths.size() || preds.empty()) {
    throw LengthMismatch("metric inputs must be non-empty and of equal length");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < preds.size(); ++i) sum += std::abs(preds[i] - truths[i]);
  return sum / static_cast<double>(preds.size());
}

PreparedData build_dataset(const ExperimentSpec& spec) {
  validate(spec);
  PreparedData out;
  Rng sample_rng(Rng::derive_seed(spec.train.seed, kSampleStream));
  Rng split_rng(Rng::derive_seed(spec.train.seed, kSplitStream));

  if (spec.generator == "csv-trend") {
    const std::vector<double> series = load_series_csv(spec.csv_path, spec.csv_column);
    const Decomposition d = seasonal_decompose_multiplicative(series, spec.period);
    std::vector<double> trend;
    for (const auto& t : d.trend) {
      if (t) trend.push_back(*t);
    }
    // The trend series is normalised as a whole; inputs and targets share it.
    out.scaler = scaler_fit(trend, spec.scaler_lo, spec.scaler_hi);
    std::vector<double> scaled(trend.size());
    std::transform(trend.begin(), trend.end(), scaled.begin(),
                   [&](double v) { return scaler_apply(out.scaler, v); });
    const auto windows = lag_window_samples(scaled, spec.window);
    out.data = make_chronological_split(windows, spec.fractions);
    out.raw = out.data;
    for (auto* split : {&out.raw.train, &out.raw.val, &out.raw.test}) {
      for (Sample& s : *split) s.y = scaler_invert(out.scaler, s.y);
    }
    out.data.provenance = out.raw.provenance = "csv-trend(" + spec.csv_path + ":" +
                                               spec.csv_column + ", period=" +
                                               std::to_string(spec.period) + ", window=" +
                                               std::to_string(spec.window) + ")";
    return out;
  }

  std::vector<Sample> samples;
  if (is_2d(spec.generator)) {
    samples = uniform_samples_2d(target_2d(spec.generator), spec.domain_lo, spec.domain_hi,
                                 spec.n_points, sample_rng);
  } else {
    samples = grid_samples(target_1d(spec.generator), spec.domain_lo, spec.domain_hi,
                           spec.n_points);
  }

  if (spec.split == "shuffled") {
    out.raw = make_split(samples, spec.fractions, split_rng);
  } else if (spec.split == "interleaved") {
    out.raw = make_interleaved_split(samples, split_rng);
  } else if (spec.split == "chronological") {
    out.raw = make_chronological_split(samples, spec.fractions);
  } else {
    MissingMask mask;
    if (spec.mask == "disk") {
      mask = DiskMask{{0.0, 0.0}, spec.mask_radius};
    } else {
      mask = IntervalMask{find_turning_points(target_1d(spec.generator), spec.domain_lo,
                                              spec.domain_hi),
                          spec.mask_half_width};
    }
    out.raw = make_masked_split(samples, mask, spec.visible_train_fraction, split_rng);
    out.mask = mask;
  }
  out.raw.provenance = spec.generator + "(n=" + std::to_string(spec.n_points) + ", " +
                       spec.sampling + " on [" + format_double(spec.domain_lo) + ", " +
                       format_double(spec.domain_hi) + "], split=" + spec.split + ")";
  out.scaler = scaler_fit(targets(out.raw.train), spec.scaler_lo, spec.scaler_hi);
  out.data = out.raw;
  scale_targets(out.data, out.scaler);
  return out;
}

AnyModel init_model(const ExperimentSpec& spec, std::size_t inputs) {
  Rng rng(Rng::derive_seed(spec.train.seed, kInitStream));
  if (spec.model == "relu_mlp") return init_mlp(spec.hidden, inputs, rng);
  if (spec.init == "elliptical") {
    return init_elliptical(spec.hidden, inputs, rng, spec.ellipse_a, spec.ellipse_b, spec.epsilon);
  }
  return init_xavier_complex(spec.hidden, inputs, rng, spec.epsilon);
}

std::vector<PredictionRow> predict_all(const AnyModel& model, const PreparedData& prepared) {
  std::vector<PredictionRow> rows;
  const double unit = scaler_unit(prepared.scaler);
  const std::pair<const char*, const std::vector<Sample>*> parts[] = {
      {"train", &prepared.raw.train}, {"val", &prepared.raw.val}, {"test", &prepared.raw.test}};
  for (const auto& [name, samples] : parts) {
    for (const Sample& s : *samples) {
      PredictionRow row{name, s.x, s.y, 0.0, 0.0};
      if (const auto* net = std::get_if<CauchyNetModel>(&model)) {
        const ForwardOutput fo = forward(*net, s.x);
        row.y_pred = scaler_invert(prepared.scaler, fo.y);
        row.e_pred = fo.e * unit;
      } else {
        row.y_pred = scaler_invert(prepared.scaler, std::get<MlpModel>(model).predict(s.x));
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

MetricsReport evaluate_predictions(const AnyModel& model, std::span<const PredictionRow> rows) {
  std::vector<double> preds;
  std::vector<double> truths;
  for (const PredictionRow& r : rows) {
    if (r.split != "test") continue;
    preds.push_back(r.y_pred);
    truths.push_back(r.y_true);
  }
  MetricsReport m;
  m.mse = metric_mse(preds, truths);
  m.mae = metric_mae(preds, truths);
  for (std::size_t i = 0; i < preds.size(); ++i) m.abs_errors.push_back(std::abs(preds[i] - truths[i]));
  if (const auto* net = std::get_if<CauchyNetModel>(&model)) {
    const ParameterCount pc = parameter_count(*net);
    m.complex_params = pc.complex_params;
    m.real_params = pc.real_params;
    m.notes.push_back("complex_params counts h(m+1) complex values and real_params counts 2h(m+1) "
                      "real scalars; published parameter tables that list h(m+1) use the complex "
                      "count");
  } else {
    const auto& mlp = std::get<MlpModel>(model);
    m.real_params = mlp.parameter_size();
  }
  if (!std::isfinite(m.mse) || !std::isfinite(m.mae)) {
    m.notes.push_back("non-finite predictions on the test split");
  }
  return m;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << content;
    if (!out) throw IoError("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move " + tmp.string() + " into place: " + ec.message());
}

std::string sha256_hex(const std::string& content) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(content.data(), content.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xF];
  }
  return out;
}

std::string strip_wall_ms(const std::string& trainlog_csv) {
  std::istringstream in(trainlog_csv);
  std::string line;
  std::string out;
  while (std::getline(in, line)) {
    const auto comma = line.rfind(',');
    out += (comma == std::string::npos ? line : line.substr(0, comma)) + '\n';
  }
  return out;
}

namespace {

std::string trainlog_text(const TrainLog& log) {
  std::ostringstream out;
  write_trainlog_csv(log, out);
  return out.str();
}

std::string predictions_text(std::span<const PredictionRow> rows, std::size_t m) {
  std::ostringstream out;
  out << "split";
  for (std::size_t i = 0; i < m; ++i) out << ",x" << i;
  out << ",y_true,y_pred,e_pred,abs_err\n";
  for (const PredictionRow& r : rows) {
    out << r.split;
    for (double v : r.x) out << ',' << format_double(v);
    out << ',' << format_double(r.y_true) << ',' << format_double(r.y_pred) << ','
        << format_double(r.e_pred) << ',' << format_double(std::abs(r.y_pred - r.y_true)) << '\n';
  }
  return out.str();
}

std::string signed_error_text(std::span<const PredictionRow> rows, std::size_t m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m; ++i) out << 'x' << i << ',';
  out << "y_true,y_pred,signed_error\n";
  for (const PredictionRow& r : rows) {
    if (r.split != "test") continue;
    for (double v : r.x) out << format_double(v) << ',';
    out << format_double(r.y_true) << ',' << format_double(r.y_pred) << ','
        << format_double(r.y_pred - r.y_true) << '\n';
  }
  return out.str();
}

std::string metrics_text(const MetricsReport& m, const std::string& model) {
  std::ostringstream out;
  out << "metric,value\n";
  out << "model," << model << '\n';
  out << "mse," << format_double(m.mse) << '\n';
  out << "mae," << format_double(m.mae) << '\n';
  out << "test_count," << m.abs_errors.size() << '\n';
  out << "complex_params," << m.complex_params << '\n';
  out << "real_params," << m.real_params << '\n';
  out << "wall_ms," << format_fixed(m.wall_ms, 3) << '\n';
  for (const std::string& note : m.notes) out << "note,\"" << note << "\"\n";
  return out.str();
}

std::string checkpoint_text(const AnyModel& model, const ScalerState& scaler, std::uint64_t seed,
                            const std::filesystem::path& scratch) {
  if (const auto* net = std::get_if<CauchyNetModel>(&model)) {
    save_checkpoint(*net, scaler, seed, scratch);
  } else {
    save_mlp_checkpoint(std::get<MlpModel>(model), scaler, seed, scratch);
  }
  std::ifstream in(scratch, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  in.close();
  std::filesystem::remove(scratch);
  return buf.str();
}

struct OutputFile {
  std::string name;
  std::string content;
  bool deterministic = true;
};

std::vector<std::filesystem::path> write_outputs(const ExperimentSpec& spec,
                                                 const std::vector<OutputFile>& files,
                                                 const std::string& status,
                                                 const std::string& error) {
  std::error_code ec;
  std::filesystem::create_directories(spec.output_dir, ec);
  if (ec) throw IoError("cannot create " + spec.output_dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  json entries = json::array();
  for (const OutputFile& f : files) {
    const auto path = spec.output_dir / f.name;
    write_file_atomic(path, f.content);
    written.push_back(path);
    json e = {{"path", f.name}, {"sha256", sha256_hex(f.content)}, {"deterministic", f.deterministic}};
    if (f.name == "trainlog.csv") e["sha256_without_wall_ms"] = sha256_hex(strip_wall_ms(f.content));
    entries.push_back(std::move(e));
  }
  json manifest = {{"version", 1},
                   {"name", spec.name},
                   {"seed", spec.train.seed},
                   {"model", spec.model},
                   {"status", status},
                   {"files", entries}};
  if (!error.empty()) manifest["error"] = error;
  const auto path = spec.output_dir / "manifest.json";
  write_file_atomic(path, manifest.dump(1) + "\n");
  written.push_back(path);
  return written;
}

template <typename M>
TrainLog train_any(M& model, const PreparedData& prepared, const ExperimentSpec& spec,
                   const RunOptions& options) {
  EpochCallback<M> callback;
  if (options.on_snapshot) {
    callback = [&](const M& m, const EpochRecord& rec) {
      if (rec.epoch % spec.snapshot_every != 0 && rec.epoch != spec.train.epochs) return;
      std::vector<double> preds;
      std::vector<double> truths;
      for (const Sample& s : prepared.raw.test) {
        preds.push_back(scaler_invert(prepared.scaler, m.predict(s.x)));
        truths.push_back(s.y);
      }
      options.on_snapshot(rec.epoch, metric_mse(preds, truths));
    };
  }
  return train(model, prepared.data, spec.train, callback);
}

}  // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec, const RunOptions& options) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();
  ExperimentResult result{spec, build_dataset(spec), {}, {}, {}, {}, {}};
  if (result.prepared.data.test.empty()) {
    throw ValidationError("experiment '" + spec.name + "' has an empty test split");
  }
  result.model = init_model(spec, result.prepared.data.m);

  try {
    result.log = std::visit([&](auto& m) { return train_any(m, result.prepared, spec, options); },
                            result.model);
  } catch (const TrainingDiverged& e) {
    if (options.write_files) {
      write_outputs(spec, {{"trainlog.csv", trainlog_text(e.log()), false}}, "partial", e.what());
    }
    throw;
  }

  result.predictions = predict_all(result.model, result.prepared);
  result.metrics = evaluate_predictions(result.model, result.predictions);
  result.metrics.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (options.write_files) {
    const std::size_t m = result.prepared.data.m;
    std::vector<OutputFile> files = {
        {"trainlog.csv", trainlog_text(result.log), false},
        {"predictions.csv", predictions_text(result.predictions, m), true},
        {"metrics.csv", metrics_text(result.metrics, spec.model), false},
        {"checkpoint.json",
         checkpoint_text(result.model, result.prepared.scaler, spec.train.seed,
                         (std::filesystem::create_directories(spec.output_dir),
                          spec.output_dir / "checkpoint.json.scratch")),
         true},
        {"config.txt", dump_config(spec), true},
    };
    if (result.prepared.mask) {
      files.push_back({"signed_error.csv", signed_error_text(result.predictions, m), true});
    }
    std::ostringstream dataset;
    write_dataset_csv(result.prepared.raw, dataset);
    files.push_back({"dataset.csv", dataset.str(), true});
    result.files = write_outputs(spec, files, "complete", "");
  }
  return result;
}

MetricsReport evaluate_checkpoint(const ExperimentSpec& spec,
                                  const std::filesystem::path& checkpoint,
                                  const std::optional<std::filesystem::path>& out) {
  std::ifstream in(checkpoint, std::ios::binary);
  if (!in) throw IoError("cannot open checkpoint: " + checkpoint.string());
  std::string model_type = "cauchynet";
  try {
    const json doc = json::parse(in);
    if (doc.contains("model_type")) model_type = doc.at("model_type").get<std::string>();
  } catch (const json::exception& e) {
    throw SchemaError(std::string("checkpoint is not valid JSON: ") + e.what());
  }

  PreparedData prepared = build_dataset(spec);
  AnyModel model;
  if (model_type == "relu_mlp") {
    auto cp = load_mlp_checkpoint(checkpoint);
    model = std::move(cp.model);
    prepared.scaler = cp.scaler;
  } else {
    auto cp = load_checkpoint(checkpoint);
    model = std::move(cp.model);
    prepared.scaler = cp.scaler;
  }
  const std::size_t dim = std::visit([](const auto& m) { return m.input_dim(); }, model);
  if (dim != prepared.data.m) throw SchemaError("checkpoint input dimension does not match dataset");

  const auto rows = predict_all(model, prepared);
  MetricsReport metrics = evaluate_predictions(model, rows);
  if (out) {
    std::error_code ec;
    std::filesystem::create_directories(*out, ec);
    if (ec) throw IoError("cannot create " + out->string());
    write_file_atomic(*out / "predictions.csv", predictions_text(rows, prepared.data.m));
    write_file_atomic(*out / "metrics.csv", metrics_text(metrics, model_type));
  }
  return metrics;
}

std::vector<AblationRow> run_lambda_ablation(const ExperimentSpec& base,
                                             const std::vector<double>& lambdas,
                                             std::size_t threads) {
  if (lambdas.empty()) throw ValidationError("lambda ablation needs at least one lambda");
  for (double l : lambdas) {
    if (!(l >= 0.0)) throw ValidationError("lambdas must be >= 0");
  }
  validate(base);
  std::vector<std::vector<AblationRow>> per_lambda(lambdas.size());
  std::vector<std::string> errors(lambdas.size());
  parallel_for(lambdas.size(), threads, [&](std::size_t i) {
    ExperimentSpec spec = base;
    spec.train.lambda = lambdas[i];
    spec.output_dir = base.output_dir / ("lambda_" + label(lambdas[i]));
    RunOptions options;
    options.on_snapshot = [&, i](std::size_t epoch, double mse) {
      per_lambda[i].push_back({lambdas[i], spec.train.seed, epoch, mse});
    };
    try {
      run_experiment(spec, options);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  for (const std::string& e : errors) {
    if (!e.empty()) throw NonFinite("lambda ablation run failed: " + e);
  }

  std::vector<AblationRow> rows;
  for (const auto& group : per_lambda) rows.insert(rows.end(), group.begin(), group.end());
  std::ostringstream csv;
  csv << "lambda,seed,epoch,test_mse\n";
  for (const AblationRow& r : rows) {
    csv << format_double(r.lambda) << ',' << r.seed << ',' << r.epoch << ','
        << format_double(r.test_mse) << '\n';
  }
  std::filesystem::create_directories(base.output_dir);
  write_file_atomic(base.output_dir / "ablation.csv", csv.str());
  return rows;
}

std::vector<GridCell> run_sensitivity_grid(const ExperimentSpec& base, const SweepGrid& grid,
                                           std::size_t threads) {
  if (grid.cells() == 0) throw ValidationError("sweep grid has an empty axis");
  validate(base);
  std::vector<GridCell> cells;
  for (std::size_t h : grid.hidden) {
    for (std::size_t n : grid.sizes) {
      for (double lr : grid.lrs) {
        for (double wd : grid.wds) cells.push_back({h, n, lr, wd, 0.0, ""});
      }
    }
  }
  const auto grid_dir = base.output_dir / ("sweep_" + grid.name);
  std::filesystem::create_directories(grid_dir);
  parallel_for(cells.size(), threads, [&](std::size_t i) {
    GridCell& cell = cells[i];
    ExperimentSpec spec = base;
    spec.hidden = cell.hidden;
    spec.n_points = cell.n;
    spec.train.lr0 = cell.lr;
    spec.train.weight_decay = cell.wd;
    spec.output_dir = grid_dir / ("h" + std::to_string(cell.hidden) + "_n" +
                                  std::to_string(cell.n) + "_lr" + label(cell.lr) + "_wd" +
                                  label(cell.wd));
    try {
      const ExperimentResult r = run_experiment(spec, {false, {}});
      cell.test_mse = r.metrics.mse;
      std::filesystem::create_directories(spec.output_dir);
      write_file_atomic(spec.output_dir / "metrics.csv", metrics_text(r.metrics, spec.model));
    } catch (const std::exception& e) {
      cell.test_mse = std::numeric_limits<double>::quiet_NaN();
      cell.note = e.what();
    }
  });

  std::ostringstream csv;
  csv << "h,n,lr,wd,test_mse,note\n";
  for (const GridCell& c : cells) {
    std::string note = c.note;
    std::replace(note.begin(), note.end(), '"', '\'');
    csv << c.hidden << ',' << c.n << ',' << format_double(c.lr) << ',' << format_double(c.wd) << ','
        << format_double(c.test_mse) << ",\"" << note << "\"\n";
  }
  write_file_atomic(base.output_dir / ("sweep_" + grid.name + ".csv"), csv.str());
  return cells;
}

std::vector<KernelDemoRow> run_kernel_demo(const KernelDemoSpec& spec) {
  std::function<Complex(Complex)> f;
  if (spec.target == "one") {
    f = [](Complex) { return Complex{1.0, 0.0}; };
  } else if (spec.target == "z2") {
    f = [](Complex z) { return z * z; };
  } else if (spec.target == "exp") {
    f = [](Complex z) { return std::exp(z); };
  } else if (spec.target == "inv2") {
    f = [](Complex z) { return 1.0 / (Complex{2.0, 0.0} - z); };
  } else {
    throw ValidationError("unknown kernel demo target '" + spec.target +
                          "' (expected one, z2, exp, inv2)");
  }
  if (!(spec.semi_major > 0.0 && spec.semi_minor > 0.0)) {
    throw ValidationError("ellipse semi-axes must be > 0");
  }
  if (spec.nodes.empty()) throw ValidationError("kernel demo needs at least one node count");
  if (spec.grid < 2 || !(spec.hi > spec.lo)) throw ValidationError("kernel demo grid is empty");
  const auto inside = [&](Complex z) {
    const double u = (z.real() - spec.center.real()) / spec.semi_major;
    const double v = (z.imag() - spec.center.imag()) / spec.semi_minor;
    return u * u + v * v;
  };
  if (inside({spec.lo, 0.0}) >= 1.0 || inside({spec.hi, 0.0}) >= 1.0) {
    throw ValidationError("evaluation interval must lie strictly inside the ellipse");
  }
  if (spec.target == "inv2" && inside({2.0, 0.0}) <= 1.0) {
    throw ValidationError("the pole of 1/(2-z) at z=2 must lie outside the ellipse");
  }

  std::vector<KernelDemoRow> rows;
  for (std::size_t nodes : spec.nodes) {
    const BoundaryMesh mesh = ellipse_mesh(spec.semi_major, spec.semi_minor, spec.center, nodes);
    const KernelExpansion expansion =
        quadrature_expansion([&](std::span<const Complex> z) { return f(z[0]); }, mesh);
    double sup = 0.0;
    for (std::size_t j = 0; j < spec.grid; ++j) {
      const double x = spec.lo + (spec.hi - spec.lo) * static_cast<double>(j) /
                                     static_cast<double>(spec.grid - 1);
      const double xs[] = {x};
      sup = std::max(sup, std::abs(evaluate_expansion(expansion, xs) - f({x, 0.0})));
    }
    rows.push_back({nodes, sup});
  }
  return rows;
}

}  // namespace cauchynet
