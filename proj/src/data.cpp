#include "cauchynet/data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "cauchynet/errors.hpp"
#include "cauchynet/format.hpp"

namespace cauchynet {

double target_intro_spike(double x) {
  const double d = x - 0.5;
  return std::sin(3.0 * x) + 4.0 / (d * d + 0.01);
}

double target_exp1(double x) {
  const double a = x + 0.6;
  const double b = x + 0.4;
  const double sign = x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
  return 1.0 / (a * a + 0.005) - 40.0 * std::exp(-2.0 * b * b) +
         50.0 * sign * std::pow(std::abs(std::sin(3.0 * x) + 0.8), 1.5) * std::sin(10.0 * x);
}

double target_exp2_gap(double x) {
  const double a = x - 1.0;
  const double b = x + 0.5;
  return std::sin(2.0 * x - 4.0) + 0.5 * std::cos(5.0 * x - 5.0) + 0.05 / (a * a + 0.1) +
         0.01 / (b * b + 0.05) - 0.01 * (x * x - x * x * x);
}

double target_2d_missing_disk(double x, double y) {
  const double a = x - 1.0;
  return 3.0 - x * x + x * y - y * y - 1.0 / (5.0 + a * a);
}

double target_2d_surface(double x, double y) {
  return x * x - x * y + 3.0 * y + y * y + 1.0 / (5.0 + x * x);
}

std::vector<double> find_turning_points(const std::function<double(double)>& f, double lo,
                                        double hi, std::size_t grid) {
  if (grid < 100) throw ValidationError("turning-point grid must have >= 100 intervals");
  if (!(hi > lo)) throw ValidationError("turning-point domain must have hi > lo");
  const double delta = 1e-6 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
  const auto derivative = [&](double x) { return (f(x + delta) - f(x - delta)) / (2.0 * delta); };
  const auto sign = [](double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); };

  std::vector<double> points;
  const double step = (hi - lo) / static_cast<double>(grid);
  // Zero derivative values carry the previous nonzero sign forward, so flat
  // stretches never register and a root exactly on a node is found once.
  double anchor = lo;
  int anchor_sign = sign(derivative(lo));
  for (std::size_t i = 1; i <= grid; ++i) {
    const double b = (i == grid) ? hi : lo + step * static_cast<double>(i);
    const int sb = sign(derivative(b));
    if (sb == 0) continue;
    if (anchor_sign != 0 && sb != anchor_sign) {
      double left = anchor;
      double right = b;
      while (right - left > 1e-10) {
        const double mid = 0.5 * (left + right);
        if (sign(derivative(mid)) == anchor_sign) {
          left = mid;
        } else {
          right = mid;
        }
      }
      points.push_back(0.5 * (left + right));
    }
    anchor = b;
    anchor_sign = sb;
  }
  return points;
}

std::vector<Sample> grid_samples(const std::function<double(double)>& f, double lo, double hi,
                                 std::size_t n) {
  if (n < 2) throw ValidationError("grid sampling needs n >= 2");
  std::vector<Sample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    out.push_back({{x}, f(x)});
  }
  return out;
}

std::vector<Sample> uniform_samples_2d(const std::function<double(double, double)>& f, double lo,
                                       double hi, std::size_t n, Rng& rng) {
  std::vector<Sample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.uniform(lo, hi);
    const double y = rng.uniform(lo, hi);
    out.push_back({{x, y}, f(x, y)});
  }
  return out;
}

bool mask_contains(const MissingMask& mask, std::span<const double> x) {
  if (const auto* iv = std::get_if<IntervalMask>(&mask)) {
    if (x.size() != 1) throw LengthMismatch("interval mask applies to 1-D inputs");
    return std::any_of(iv->centers.begin(), iv->centers.end(),
                       [&](double c) { return std::abs(x[0] - c) <= iv->half_width; });
  }
  const auto& disk = std::get<DiskMask>(mask);
  if (x.size() != 2) throw LengthMismatch("disk mask applies to 2-D inputs");
  const double dx = x[0] - disk.center[0];
  const double dy = x[1] - disk.center[1];
  return dx * dx + dy * dy <= disk.radius * disk.radius;
}

void validate_mask(const MissingMask& mask) {
  if (const auto* iv = std::get_if<IntervalMask>(&mask)) {
    if (iv->centers.empty()) throw ValidationError("interval mask has no centers");
    if (!(iv->half_width > 0.0)) throw ValidationError("interval half-width must be > 0");
  } else if (!(std::get<DiskMask>(mask).radius > 0.0)) {
    throw ValidationError("disk radius must be > 0");
  }
}

MaskedSamples apply_mask(std::span<const Sample> samples, const MissingMask& mask) {
  validate_mask(mask);
  MaskedSamples out;
  for (const Sample& s : samples) {
    (mask_contains(mask, s.x) ? out.hidden : out.visible).push_back(s);
  }
  return out;
}

std::size_t interval_mask_components(const IntervalMask& mask) {
  std::vector<double> centers = mask.centers;
  std::sort(centers.begin(), centers.end());
  std::size_t components = 0;
  double reach = -std::numeric_limits<double>::infinity();
  for (double c : centers) {
    if (c - mask.half_width > reach) ++components;
    reach = std::max(reach, c + mask.half_width);
  }
  return components;
}

namespace {

std::vector<std::size_t> shuffled_indices(std::size_t n, Rng& rng) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  rng.shuffle(std::span<std::size_t>(idx));
  return idx;
}

std::size_t input_dim(std::span<const Sample> samples) {
  if (samples.empty()) throw ValidationError("dataset is empty");
  const std::size_t m = samples.front().x.size();
  for (const Sample& s : samples) {
    if (s.x.size() != m) throw LengthMismatch("samples differ in input dimension");
  }
  return m;
}

void check_fractions(const std::array<double, 3>& f) {
  for (double v : f) {
    if (!(v >= 0.0)) throw ValidationError("split fractions must be >= 0");
  }
  if (std::abs(f[0] + f[1] + f[2] - 1.0) > 1e-9) {
    throw ValidationError("split fractions must sum to 1");
  }
}

}  // namespace

SplitDataset make_split(std::span<const Sample> samples, std::array<double, 3> fractions,
                        Rng& rng) {
  check_fractions(fractions);
  SplitDataset out;
  out.m = input_dim(samples);
  const std::size_t n = samples.size();
  const auto n_train = static_cast<std::size_t>(std::llround(fractions[0] * n));
  const auto n_val = std::min(n - n_train, static_cast<std::size_t>(std::llround(fractions[1] * n)));
  if (n_train == 0 || n_val == 0 || (fractions[2] > 0.0 && n_train + n_val == n)) {
    throw ValidationError("too few samples for non-empty splits");
  }
  const auto idx = shuffled_indices(n, rng);
  for (std::size_t i = 0; i < n; ++i) {
    const Sample& s = samples[idx[i]];
    if (i < n_train) {
      out.train.push_back(s);
    } else if (i < n_train + n_val) {
      out.val.push_back(s);
    } else {
      out.test.push_back(s);
    }
  }
  return out;
}

SplitDataset make_interleaved_split(std::span<const Sample> samples, Rng& rng) {
  SplitDataset out;
  out.m = input_dim(samples);
  if (samples.size() < 4) throw ValidationError("too few samples for non-empty splits");
  std::vector<Sample> rest;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    (i % 2 == 0 ? out.train : rest).push_back(samples[i]);
  }
  const auto idx = shuffled_indices(rest.size(), rng);
  const std::size_t n_val = rest.size() / 2;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    (i < n_val ? out.val : out.test).push_back(rest[idx[i]]);
  }
  return out;
}

SplitDataset make_masked_split(std::span<const Sample> samples, const MissingMask& mask,
                               double train_fraction, Rng& rng) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw ValidationError("train fraction of the visible region must be in (0, 1)");
  }
  SplitDataset out;
  out.m = input_dim(samples);
  MaskedSamples parts = apply_mask(samples, mask);
  if (parts.hidden.empty()) throw ValidationError("mask hides no samples");
  const std::size_t n = parts.visible.size();
  const auto n_train = static_cast<std::size_t>(std::llround(train_fraction * n));
  if (n_train == 0 || n_train >= n) throw ValidationError("too few visible samples to split");
  const auto idx = shuffled_indices(n, rng);
  for (std::size_t i = 0; i < n; ++i) {
    (i < n_train ? out.train : out.val).push_back(parts.visible[idx[i]]);
  }
  out.test = std::move(parts.hidden);
  return out;
}

SplitDataset make_chronological_split(std::span<const Sample> samples,
                                      std::array<double, 3> fractions) {
  check_fractions(fractions);
  SplitDataset out;
  out.m = input_dim(samples);
  const std::size_t n = samples.size();
  const auto n_train = static_cast<std::size_t>(std::llround(fractions[0] * n));
  const auto n_val = std::min(n - n_train, static_cast<std::size_t>(std::llround(fractions[1] * n)));
  if (n_train == 0 || n_val == 0 || n_train + n_val >= n) {
    throw ValidationError("too few samples for non-empty splits");
  }
  out.train.assign(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(n_train));
  out.val.assign(samples.begin() + static_cast<std::ptrdiff_t>(n_train),
                 samples.begin() + static_cast<std::ptrdiff_t>(n_train + n_val));
  out.test.assign(samples.begin() + static_cast<std::ptrdiff_t>(n_train + n_val), samples.end());
  return out;
}

void scale_targets(SplitDataset& dataset, const ScalerState& scaler) {
  for (auto* split : {&dataset.train, &dataset.val, &dataset.test}) {
    for (Sample& s : *split) s.y = scaler_apply(scaler, s.y);
  }
}

void write_dataset_csv(const SplitDataset& dataset, std::ostream& out) {
  out << "split";
  for (std::size_t i = 0; i < dataset.m; ++i) out << ",x" << i;
  out << ",y\n";
  const std::pair<const char*, const std::vector<Sample>*> parts[] = {
      {"train", &dataset.train}, {"val", &dataset.val}, {"test", &dataset.test}};
  for (const auto& [name, samples] : parts) {
    for (const Sample& s : *samples) {
      out << name;
      for (double v : s.x) out << ',' << format_double(v);
      out << ',' << format_double(s.y) << '\n';
    }
  }
}

Decomposition seasonal_decompose_multiplicative(std::span<const double> series,
                                                std::size_t period) {
  if (period < 2) throw ValidationError("period must be >= 2");
  if (series.size() < 2 * period) throw ValidationError("series must span two full periods");
  for (std::size_t t = 0; t < series.size(); ++t) {
    if (!(series[t] > 0.0)) {
      throw NonPositiveValue("multiplicative decomposition needs positive data (index " +
                             std::to_string(t) + ")");
    }
  }
  const std::size_t n = series.size();
  const std::size_t half = period / 2;
  Decomposition d;
  d.period = period;
  d.trend.assign(n, std::nullopt);
  d.residual.assign(n, std::nullopt);

  for (std::size_t t = half; t + half < n; ++t) {
    double sum = 0.0;
    if (period % 2 == 1) {
      for (std::size_t j = t - half; j <= t + half; ++j) sum += series[j];
    } else {
      sum = 0.5 * (series[t - half] + series[t + half]);
      for (std::size_t j = t - half + 1; j < t + half; ++j) sum += series[j];
    }
    d.trend[t] = sum / static_cast<double>(period);
  }

  std::vector<double> phase_sum(period, 0.0);
  std::vector<std::size_t> phase_count(period, 0);
  for (std::size_t t = 0; t < n; ++t) {
    if (!d.trend[t]) continue;
    phase_sum[t % period] += series[t] / *d.trend[t];
    phase_count[t % period] += 1;
  }
  std::vector<double> phase(period);
  for (std::size_t j = 0; j < period; ++j) phase[j] = phase_sum[j] / static_cast<double>(phase_count[j]);
  const double mean = std::accumulate(phase.begin(), phase.end(), 0.0) / static_cast<double>(period);
  for (double& p : phase) p /= mean;

  d.seasonal.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    d.seasonal[t] = phase[t % period];
    if (d.trend[t]) d.residual[t] = series[t] / (*d.trend[t] * d.seasonal[t]);
  }
  return d;
}

std::vector<Sample> lag_window_samples(std::span<const double> series, std::size_t window) {
  if (window < 1) throw ValidationError("window must be >= 1");
  if (series.size() <= window) throw ValidationError("series shorter than the window");
  std::vector<Sample> out;
  out.reserve(series.size() - window);
  for (std::size_t t = window; t < series.size(); ++t) {
    out.push_back({std::vector<double>(series.begin() + static_cast<std::ptrdiff_t>(t - window),
                                       series.begin() + static_cast<std::ptrdiff_t>(t)),
                   series[t]});
  }
  return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

std::vector<double> load_series_csv(const std::filesystem::path& path, const std::string& column) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open CSV file: " + path.string());
  std::string header;
  if (!std::getline(in, header)) throw ParseError("CSV file is empty: " + path.string());
  if (header.rfind("\xEF\xBB\xBF", 0) == 0) header.erase(0, 3);
  std::vector<std::string> names = split_csv_line(header);
  for (std::string& nm : names) nm = trim(nm);
  const auto it = std::find(names.begin(), names.end(), column);
  if (it == names.end()) {
    std::string available;
    for (const std::string& nm : names) available += (available.empty() ? "" : ", ") + nm;
    throw ParseError("column '" + column + "' not found; available columns: " + available);
  }
  const auto col = static_cast<std::size_t>(it - names.begin());

  std::vector<double> values;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    ++row;
    const auto cells = split_csv_line(line);
    double v = 0.0;
    if (col >= cells.size() || !parse_double(trim(cells[col]), v)) {
      throw ParseError("row " + std::to_string(row) + " (line " + std::to_string(row + 1) +
                       "): cannot parse column '" + column + "' as a number");
    }
    values.push_back(v);
  }
  return values;
}

}  // namespace cauchynet
