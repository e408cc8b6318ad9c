#include "cauchynet/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "cauchynet/errors.hpp"
#include "cauchynet/format.hpp"

namespace cauchynet {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

double to_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  if (!parse_double(text, v)) throw ValidationError("'" + key + "' expects a number, got '" + text + "'");
  return v;
}

std::uint64_t to_u64(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ValidationError("'" + key + "' expects a non-negative integer, got '" + text + "'");
  }
  return v;
}

std::size_t to_count(const std::string& key, const std::string& text) {
  return static_cast<std::size_t>(to_u64(key, text));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> to_doubles(const std::string& key, const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split_list(text)) out.push_back(to_double(key, item));
  return out;
}

std::vector<std::size_t> to_counts(const std::string& key, const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& item : split_list(text)) out.push_back(to_count(key, item));
  return out;
}

std::string choice(const std::string& key, const std::string& text,
                   std::initializer_list<const char*> allowed) {
  const std::string t = trim(text);
  for (const char* a : allowed) {
    if (t == a) return t;
  }
  std::string options;
  for (const char* a : allowed) options += (options.empty() ? "" : ", ") + std::string(a);
  throw ValidationError("'" + key + "' must be one of: " + options + " (got '" + t + "')");
}

template <typename T>
std::string join(const std::vector<T>& values) {
  std::string out;
  for (const T& v : values) {
    if (!out.empty()) out += ',';
    if constexpr (std::is_floating_point_v<T>) {
      out += format_double(v);
    } else {
      out += std::to_string(v);
    }
  }
  return out;
}

// Sweep axes set individually replace the preset grids with one custom grid
// whose unset axes take the base experiment's values.
SweepGrid& custom_grid(ExperimentSpec& spec) {
  if (spec.grids.size() != 1 || spec.grids.front().name != "custom") {
    spec.grids = {SweepGrid{"custom", {spec.hidden}, {spec.n_points}, {spec.train.lr0},
                            {spec.train.weight_decay}}};
  }
  return spec.grids.front();
}

using Setter = std::function<void(ExperimentSpec&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"version", [](auto& s, auto& k, auto& v) {
         if (to_count(k, v) != 1) throw ValidationError("unsupported config version " + v);
         s.version = 1;
       }},
      {"name", [](auto& s, auto&, auto& v) { s.name = trim(v); }},
      {"generator", [](auto& s, auto&, auto& v) { s.generator = trim(v); }},
      {"n_points", [](auto& s, auto& k, auto& v) { s.n_points = to_count(k, v); }},
      {"sampling", [](auto& s, auto& k, auto& v) { s.sampling = choice(k, v, {"grid", "uniform"}); }},
      {"domain_lo", [](auto& s, auto& k, auto& v) { s.domain_lo = to_double(k, v); }},
      {"domain_hi", [](auto& s, auto& k, auto& v) { s.domain_hi = to_double(k, v); }},
      {"split", [](auto& s, auto& k, auto& v) {
         s.split = choice(k, v, {"shuffled", "interleaved", "masked", "chronological"});
       }},
      {"split_fractions", [](auto& s, auto& k, auto& v) {
         const auto f = to_doubles(k, v);
         if (f.size() != 3) throw ValidationError("'split_fractions' needs three values");
         s.fractions = {f[0], f[1], f[2]};
       }},
      {"mask", [](auto& s, auto& k, auto& v) { s.mask = choice(k, v, {"none", "turning-points", "disk"}); }},
      {"mask_half_width", [](auto& s, auto& k, auto& v) { s.mask_half_width = to_double(k, v); }},
      {"mask_radius", [](auto& s, auto& k, auto& v) { s.mask_radius = to_double(k, v); }},
      {"visible_train_fraction", [](auto& s, auto& k, auto& v) { s.visible_train_fraction = to_double(k, v); }},
      {"scaler_lo", [](auto& s, auto& k, auto& v) { s.scaler_lo = to_double(k, v); }},
      {"scaler_hi", [](auto& s, auto& k, auto& v) { s.scaler_hi = to_double(k, v); }},
      {"csv_path", [](auto& s, auto&, auto& v) { s.csv_path = trim(v); }},
      {"csv_column", [](auto& s, auto&, auto& v) { s.csv_column = trim(v); }},
      {"period", [](auto& s, auto& k, auto& v) { s.period = to_count(k, v); }},
      {"window", [](auto& s, auto& k, auto& v) { s.window = to_count(k, v); }},
      {"model", [](auto& s, auto& k, auto& v) { s.model = choice(k, v, {"cauchynet", "relu_mlp"}); }},
      {"hidden", [](auto& s, auto& k, auto& v) { s.hidden = to_count(k, v); }},
      {"epsilon", [](auto& s, auto& k, auto& v) { s.epsilon = to_double(k, v); }},
      {"init", [](auto& s, auto& k, auto& v) { s.init = choice(k, v, {"xavier", "elliptical"}); }},
      {"ellipse_a", [](auto& s, auto& k, auto& v) { s.ellipse_a = to_double(k, v); }},
      {"ellipse_b", [](auto& s, auto& k, auto& v) { s.ellipse_b = to_double(k, v); }},
      {"epochs", [](auto& s, auto& k, auto& v) { s.train.epochs = to_count(k, v); }},
      {"batch_size", [](auto& s, auto& k, auto& v) { s.train.batch_size = to_count(k, v); }},
      {"lr", [](auto& s, auto& k, auto& v) { s.train.lr0 = to_double(k, v); }},
      {"lr_decay_factor", [](auto& s, auto& k, auto& v) { s.train.lr_decay_factor = to_double(k, v); }},
      {"lr_decay_every", [](auto& s, auto& k, auto& v) { s.train.lr_decay_every = to_count(k, v); }},
      {"weight_decay", [](auto& s, auto& k, auto& v) { s.train.weight_decay = to_double(k, v); }},
      {"lambda", [](auto& s, auto& k, auto& v) { s.train.lambda = to_double(k, v); }},
      {"seed", [](auto& s, auto& k, auto& v) { s.train.seed = to_u64(k, v); }},
      {"lambdas", [](auto& s, auto& k, auto& v) { s.lambdas = to_doubles(k, v); }},
      {"snapshot_every", [](auto& s, auto& k, auto& v) { s.snapshot_every = to_count(k, v); }},
      {"sweep_hidden", [](auto& s, auto& k, auto& v) { custom_grid(s).hidden = to_counts(k, v); }},
      {"sweep_sizes", [](auto& s, auto& k, auto& v) { custom_grid(s).sizes = to_counts(k, v); }},
      {"sweep_lrs", [](auto& s, auto& k, auto& v) { custom_grid(s).lrs = to_doubles(k, v); }},
      {"sweep_wds", [](auto& s, auto& k, auto& v) { custom_grid(s).wds = to_doubles(k, v); }},
      {"output_dir", [](auto& s, auto&, auto& v) { s.output_dir = trim(v); }},
  };
  return table;
}

ExperimentSpec common_setup(const std::string& name) {
  ExperimentSpec s;
  s.name = name;
  s.output_dir = "runs/" + name;
  return s;
}

}  // namespace

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names = {"intro-spike", "exp1",         "exp2-gap",
                                                 "exp2-disk",   "exp3-surface", "csv-trend"};
  return names;
}

const std::vector<PresetInfo>& preset_catalog() {
  static const std::vector<PresetInfo> catalog = {
      {"intro-spike", "rational spike sin(3x)+4/((x-0.5)^2+0.01); 200 train samples, 500 epochs, lr 0.001"},
      {"exp1", "sharp peaks on [-1,1]; 150 evenly spaced train points, 75 val, 75 test, 200 epochs"},
      {"exp2-gap", "1-D gap filling on [-2,2]; +-0.15 intervals around the six turning points withheld"},
      {"exp2-disk", "2-D imputation on [-0.8,0.8]^2; disk of radius 0.3 at the origin withheld"},
      {"exp3-surface", "2-D polynomial-rational surface on [-1.5,1.5]^2; 300 random points, 500 epochs"},
      {"exp4-csv", "trend forecasting on a user CSV (csv_path, csv_column, period, window required)"},
      {"exp5-lambda", "imaginary-penalty ablation over lambda in {0.1,0.3,0.5,1,1.5} on exp1"},
      {"exp5-grid", "sensitivity sweeps: hidden x dataset size, and learning rate x weight decay"},
  };
  return catalog;
}

ExperimentSpec preset(const std::string& name) {
  ExperimentSpec s = common_setup(name);
  if (name == "intro-spike") {
    s.generator = "intro-spike";
    s.n_points = 400;
    s.split = "shuffled";
    s.train.epochs = 500;
    s.train.lr0 = 0.001;
    s.train.weight_decay = 0.0;
  } else if (name == "exp1") {
    s.generator = "exp1";
    s.n_points = 300;
    s.split = "interleaved";
  } else if (name == "exp2-gap") {
    s.generator = "exp2-gap";
    s.n_points = 400;
    s.domain_lo = -2.0;
    s.domain_hi = 2.0;
    s.split = "masked";
    s.mask = "turning-points";
    s.visible_train_fraction = 0.7;
    s.train.epochs = 2000;
    s.train.lr_decay_every = 500;
  } else if (name == "exp2-disk") {
    s.generator = "exp2-disk";
    s.n_points = 3000;
    s.sampling = "uniform";
    s.domain_lo = -0.8;
    s.domain_hi = 0.8;
    s.split = "masked";
    s.mask = "disk";
    s.visible_train_fraction = 0.6;
  } else if (name == "exp3-surface") {
    s.generator = "exp3-surface";
    s.n_points = 300;
    s.sampling = "uniform";
    s.domain_lo = -1.5;
    s.domain_hi = 1.5;
    s.train.epochs = 500;
    s.train.weight_decay = 0.0;
  } else if (name == "exp4-csv") {
    s.generator = "csv-trend";
    s.split = "chronological";
    s.scaler_lo = -1.0;
    s.scaler_hi = 1.0;
  } else if (name == "exp5-lambda") {
    s = preset("exp1");
    s.name = name;
    s.output_dir = "runs/" + name;
  } else if (name == "exp5-grid") {
    s = preset("exp1");
    s.name = name;
    s.output_dir = "runs/" + name;
    s.split = "shuffled";
    s.grids = {SweepGrid{"hidden_size", {32, 64, 128, 256, 612, 1224}, {100, 300, 600, 1200},
                         {0.01}, {1e-4}},
               SweepGrid{"lr_wd", {128}, {300}, {0.001, 0.01, 0.1}, {0.0, 1e-5, 1e-4}}};
  } else {
    throw ValidationError("unknown preset '" + name + "'");
  }
  return s;
}

void apply_setting(ExperimentSpec& spec, const std::string& key, const std::string& value) {
  const auto& table = setters();
  const auto it = table.find(trim(key));
  if (it == table.end()) throw ValidationError("unknown config key '" + trim(key) + "'");
  it->second(spec, it->first, value);
}

void apply_override(ExperimentSpec& spec, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ValidationError("override must look like key=value: " + assignment);
  apply_setting(spec, assignment.substr(0, eq), assignment.substr(eq + 1));
}

void apply_config(ExperimentSpec& spec, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ValidationError(path.string() + ":" + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    try {
      if (key == "preset") {
        spec = preset(value);
      } else {
        apply_setting(spec, key, value);
      }
    } catch (const ValidationError& e) {
      throw ValidationError(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

ExperimentSpec load_config(const std::filesystem::path& path) {
  ExperimentSpec spec;
  apply_config(spec, path);
  return spec;
}

std::string dump_config(const ExperimentSpec& s) {
  std::ostringstream out;
  const auto kv = [&](const char* k, const std::string& v) { out << k << " = " << v << '\n'; };
  const auto num = [](double v) { return format_double(v); };
  kv("version", std::to_string(s.version));
  kv("name", s.name);
  kv("generator", s.generator);
  kv("n_points", std::to_string(s.n_points));
  kv("sampling", s.sampling);
  kv("domain_lo", num(s.domain_lo));
  kv("domain_hi", num(s.domain_hi));
  kv("split", s.split);
  kv("split_fractions", join(std::vector<double>(s.fractions.begin(), s.fractions.end())));
  kv("mask", s.mask);
  kv("mask_half_width", num(s.mask_half_width));
  kv("mask_radius", num(s.mask_radius));
  kv("visible_train_fraction", num(s.visible_train_fraction));
  kv("scaler_lo", num(s.scaler_lo));
  kv("scaler_hi", num(s.scaler_hi));
  if (!s.csv_path.empty()) kv("csv_path", s.csv_path);
  kv("csv_column", s.csv_column);
  kv("period", std::to_string(s.period));
  kv("window", std::to_string(s.window));
  kv("model", s.model);
  kv("hidden", std::to_string(s.hidden));
  kv("epsilon", num(s.epsilon));
  kv("init", s.init);
  kv("ellipse_a", num(s.ellipse_a));
  kv("ellipse_b", num(s.ellipse_b));
  kv("epochs", std::to_string(s.train.epochs));
  kv("batch_size", std::to_string(s.train.batch_size));
  kv("lr", num(s.train.lr0));
  kv("lr_decay_factor", num(s.train.lr_decay_factor));
  kv("lr_decay_every", std::to_string(s.train.lr_decay_every));
  kv("weight_decay", num(s.train.weight_decay));
  kv("lambda", num(s.train.lambda));
  kv("seed", std::to_string(s.train.seed));
  kv("lambdas", join(s.lambdas));
  kv("snapshot_every", std::to_string(s.snapshot_every));
  for (const SweepGrid& g : s.grids) {
    out << "# grid " << g.name << ": hidden=" << join(g.hidden) << " sizes=" << join(g.sizes)
        << " lrs=" << join(g.lrs) << " wds=" << join(g.wds) << '\n';
  }
  kv("output_dir", s.output_dir.string());
  return out.str();
}

void validate(const ExperimentSpec& s) {
  const auto fail = [&](const std::string& msg) {
    throw ValidationError("experiment '" + s.name + "': " + msg);
  };
  const auto& gens = generator_names();
  if (std::find(gens.begin(), gens.end(), s.generator) == gens.end()) {
    fail("unknown generator '" + s.generator + "'");
  }
  const bool two_d = s.generator == "exp2-disk" || s.generator == "exp3-surface";
  const bool series = s.generator == "csv-trend";
  if (!series) {
    if (s.n_points < 4) fail("n_points must be >= 4");
    if (!(s.domain_hi > s.domain_lo)) fail("domain_hi must exceed domain_lo");
    if (two_d && s.sampling != "uniform") fail("2-D generators use uniform sampling");
    if (!two_d && s.sampling != "grid") fail("1-D generators use grid sampling");
  } else {
    if (s.csv_path.empty()) fail("csv-trend needs csv_path");
    if (s.csv_column.empty()) fail("csv-trend needs csv_column");
    if (s.period < 2) fail("period must be >= 2");
    if (s.window < 1) fail("window must be >= 1");
    if (s.split != "chronological") fail("csv-trend uses the chronological split");
  }

  if (s.split == "masked") {
    if (s.mask == "none") fail("masked split needs a mask");
    if (s.mask == "turning-points" && (two_d || series)) fail("turning-point mask is 1-D only");
    if (s.mask == "disk" && !two_d) fail("disk mask needs a 2-D generator");
    if (s.mask == "turning-points" && !(s.mask_half_width > 0.0)) fail("mask_half_width must be > 0");
    if (s.mask == "disk" && !(s.mask_radius > 0.0)) fail("mask_radius must be > 0");
    if (!(s.visible_train_fraction > 0.0 && s.visible_train_fraction < 1.0)) {
      fail("visible_train_fraction must be in (0, 1)");
    }
  } else {
    if (s.mask != "none") fail("a mask requires split = masked");
    double sum = 0.0;
    for (double f : s.fractions) {
      if (!(f >= 0.0)) fail("split fractions must be >= 0");
      sum += f;
    }
    if (std::abs(sum - 1.0) > 1e-9) fail("split fractions must sum to 1");
    if (!(s.fractions[0] > 0.0 && s.fractions[1] > 0.0)) fail("train and val fractions must be > 0");
  }
  if (s.split == "interleaved" && two_d) fail("interleaved split needs a 1-D grid");

  if (!(s.scaler_hi > s.scaler_lo)) fail("scaler_hi must exceed scaler_lo");
  if (s.hidden < 1) fail("hidden must be >= 1");
  if (!(s.epsilon >= 0.0)) fail("epsilon must be >= 0");
  if (s.init == "elliptical" && !(s.ellipse_a > 0.0 && s.ellipse_b > 0.0)) {
    fail("ellipse semi-axes must be > 0");
  }
  try {
    s.train.validate();
  } catch (const ValidationError& e) {
    fail(e.what());
  }
  if (s.snapshot_every < 1) fail("snapshot_every must be >= 1");
  for (double l : s.lambdas) {
    if (!(l >= 0.0)) fail("lambdas must be >= 0");
  }
  for (const SweepGrid& g : s.grids) {
    if (g.cells() == 0) fail("sweep grid '" + g.name + "' has an empty axis");
    for (std::size_t h : g.hidden) {
      if (h < 1) fail("sweep hidden sizes must be >= 1");
    }
    for (std::size_t n : g.sizes) {
      if (n < 4) fail("sweep dataset sizes must be >= 4");
    }
    for (double lr : g.lrs) {
      if (!(lr > 0.0)) fail("sweep learning rates must be > 0");
    }
    for (double wd : g.wds) {
      if (!(wd >= 0.0)) fail("sweep weight decays must be >= 0");
    }
  }
}

}  // namespace cauchynet
