#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cauchynet/data.hpp"
#include "cauchynet/errors.hpp"
#include "cauchynet/scaler.hpp"

using namespace cauchynet;
namespace fs = std::filesystem;

namespace {

struct Row1 {
  double x, value;
};
struct Row2 {
  double x, y, value;
};

// 17-digit values from tests/oracles/target_table.py (mpmath, 50 digits).
const Row1 kIntro[] = {
    {-1.0, 1.6287914963649115},
    {-0.8, 1.6774779959194372},
    {-0.6, 2.3048408937119689},
    {-0.4, 3.9460096945205783},
    {-0.19999999999999996, 7.4353575266049657},
    {0.0, 15.384615384615385},
    {0.19999999999999996, 40.564642473395025},
    {0.3999999999999999, 200.93203908596705},
    {0.6000000000000001, 200.97384763087802},
    {0.8, 40.67546318055114},
    {1.0, 15.525735392675252},
};
const Row1 kExp1[] = {
    {-1.0, -27.957214331525136},
    {-0.8, -4.6496857088708464},
    {-0.6, 162.06266281553455},
    {-0.4, -19.593319875839464},
    {-0.19999999999999996, -25.672843702882707},
    {0.0, -26.306235455550377},
    {0.19999999999999996, 54.557978956970807},
    {0.3999999999999999, -96.382422971996024},
    {0.6000000000000001, -37.727527023490377},
    {0.8, 86.921151353052903},
    {1.0, -25.238157094808349},
};
const Row1 kExp2[] = {
    {-2.0, -1.4793598714713304},
    {-1.6, -0.39127933544993789},
    {-1.2, -0.11737637984807085},
    {-0.8, 0.25058013823879364},
    {-0.3999999999999999, 1.5618142473343539},
    {0.0, 0.97742146682742017},
    {0.3999999999999999, -0.31725854572198547},
    {0.7999999999999998, -0.043702044037442608},
    {1.2000000000000002, -0.36599823242036104},
    {1.6, -1.0860545345594647},
    {2.0, 0.22887293977346017},
};
const Row2 kDisk[] = {
    {-0.8, 0.8, 0.95864077669902892},
    {-0.64, 0.7200000000000001, 1.481154223886808},
    {-0.48000000000000004, 0.64, 1.9137256786826879},
    {-0.31999999999999995, 0.56, 2.2564848599905078},
    {-0.16000000000000003, 0.48000000000000004, 2.5096104891578416},
    {0.0, 0.4, 2.6733333333333333},
    {0.16000000000000014, 0.31999999999999995, 2.7479335950644981},
    {0.32000000000000006, 0.24, 2.7337302870533099},
    {0.48, 0.16000000000000003, 2.6310610807528841},
    {0.6399999999999999, 0.08000000000000007, 2.4402530255770432},
    {0.8, 0.0, 2.1615873015873015},
};
const Row2 kSurface[] = {
    {-1.5, 1.5, 11.387931034482759},
    {-1.2, 1.35, 9.0877795031055905},
    {-0.9, 1.2, 7.1021170395869189},
    {-0.6, 1.05, 5.4290671641791047},
    {-0.30000000000000004, 0.9, 4.0664636542239687},
    {0.0, 0.75, 3.0125},
    {0.30000000000000004, 0.6, 2.2664636542239685},
    {0.6000000000000001, 0.44999999999999996, 1.8290671641791044},
    {0.8999999999999999, 0.30000000000000004, 1.7021170395869191},
    {1.2000000000000002, 0.1499999999999999, 1.8877795031055903},
    {1.5, 0.0, 2.3879310344827586},
};

// Turning points of the gap target from tests/oracles/turning_points.py.
const double kTurning[] = {-1.330995001055279, -1.0891569452877364, -0.30923511303021724,
                           0.50798422584642849, 0.9549866373532286, 1.5507258112124683};

bool close(double a, double b, double rel = 1e-13) {
  return std::abs(a - b) <= rel * std::max(1.0, std::abs(b));
}

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "cauchynet_test_data";
  fs::create_directories(dir);
  std::ofstream(dir / name, std::ios::binary) << content;
  return dir / name;
}

std::vector<double> sorted_ys(const SplitDataset& d) {
  std::vector<double> ys;
  for (const auto* part : {&d.train, &d.val, &d.test}) {
    for (const Sample& s : *part) ys.push_back(s.y);
  }
  std::sort(ys.begin(), ys.end());
  return ys;
}

}  // namespace

TEST_CASE("target value tables") {
  for (const auto& r : kIntro) CHECK(close(target_intro_spike(r.x), r.value));
  for (const auto& r : kExp1) CHECK(close(target_exp1(r.x), r.value));
  for (const auto& r : kExp2) CHECK(close(target_exp2_gap(r.x), r.value));
  for (const auto& r : kDisk) CHECK(close(target_2d_missing_disk(r.x, r.y), r.value));
  for (const auto& r : kSurface) CHECK(close(target_2d_surface(r.x, r.y), r.value));
}

TEST_CASE("target spot values") {
  CHECK(close(target_intro_spike(0.5), 400.99749498660405));
  CHECK(close(target_exp1(0.0), -26.306235455550377));
  CHECK(close(target_exp2_gap(1.0), 0.095050399261274826));
  CHECK(close(target_2d_missing_disk(0, 0), 2.8333333333333335));
  CHECK(target_2d_missing_disk(1, 0) == doctest::Approx(1.8).epsilon(1e-15));
  CHECK(target_2d_missing_disk(1, 0) != target_2d_missing_disk(0, 1));
  CHECK(target_2d_surface(0, 0) == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(close(target_2d_surface(1, 1), 4.166666666666667));
  CHECK(std::isfinite(target_2d_surface(-1.5, -1.5)));
}

TEST_CASE("intro spike is symmetric about its peak up to the sine") {
  for (double d : {0.01, 0.1, 0.37}) {
    const double lhs = target_intro_spike(0.5 + d) - target_intro_spike(0.5 - d);
    const double rhs = std::sin(3 * (0.5 + d)) - std::sin(3 * (0.5 - d));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("exp1 is continuous at zero") {
  CHECK(std::abs(target_exp1(1e-12) - target_exp1(-1e-12)) < 1e-8);
  CHECK(target_exp1(-0.6) > 150.0);
}

TEST_CASE("turning points") {
  const auto sine = find_turning_points([](double x) { return std::sin(x); }, 0, 2 * std::numbers::pi);
  REQUIRE(sine.size() == 2);
  CHECK(std::abs(sine[0] - std::numbers::pi / 2) < 1e-6);
  CHECK(std::abs(sine[1] - 3 * std::numbers::pi / 2) < 1e-6);

  const auto gap = find_turning_points(target_exp2_gap, -2, 2);
  REQUIRE(gap.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(gap[i] - kTurning[i]) < 1e-6);

  CHECK(find_turning_points([](double) { return 4.0; }, -1, 1).empty());
  CHECK_THROWS_AS(find_turning_points(target_exp2_gap, -2, 2, 50), ValidationError);
}

TEST_CASE("grid samples include both ends") {
  const auto s = grid_samples([](double x) { return 2 * x; }, -1, 1, 5);
  REQUIRE(s.size() == 5);
  CHECK(s.front().x[0] == -1.0);
  CHECK(s.back().x[0] == 1.0);
  CHECK(s[2].y == doctest::Approx(0.0));
}

TEST_CASE("uniform 2-D samples stay in the box and replay") {
  Rng a(3), b(3);
  const auto s = uniform_samples_2d(target_2d_surface, -1.5, 1.5, 200, a);
  const auto t = uniform_samples_2d(target_2d_surface, -1.5, 1.5, 200, b);
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].x == t[i].x);
    CHECK((s[i].x[0] >= -1.5 && s[i].x[0] <= 1.5 && s[i].x[1] >= -1.5 && s[i].x[1] <= 1.5));
    CHECK(s[i].y == target_2d_surface(s[i].x[0], s[i].x[1]));
  }
}

TEST_CASE("shuffled split sizes and partition") {
  const auto samples = grid_samples(target_exp1, -1, 1, 300);
  Rng rng(10);
  const SplitDataset d = make_split(samples, {0.5, 0.25, 0.25}, rng);
  CHECK(d.train.size() == 150);
  CHECK(d.val.size() == 75);
  CHECK(d.test.size() == 75);
  std::vector<double> ys;
  for (const Sample& s : samples) ys.push_back(s.y);
  std::sort(ys.begin(), ys.end());
  CHECK(sorted_ys(d) == ys);
  CHECK_THROWS_AS(make_split(samples, {0.5, 0.5, 0.5}, rng), ValidationError);
}

TEST_CASE("interleaved split keeps evenly spaced training points") {
  const auto samples = grid_samples(target_exp1, -1, 1, 300);
  Rng rng(10);
  const SplitDataset d = make_interleaved_split(samples, rng);
  CHECK(d.train.size() == 150);
  CHECK(d.val.size() == 75);
  CHECK(d.test.size() == 75);
  const double step = d.train[1].x[0] - d.train[0].x[0];
  for (std::size_t i = 1; i < d.train.size(); ++i) {
    CHECK(d.train[i].x[0] - d.train[i - 1].x[0] == doctest::Approx(step));
  }
}

TEST_CASE("chronological split keeps order") {
  const auto samples = grid_samples([](double x) { return x; }, 0, 1, 8);
  const SplitDataset d = make_chronological_split(samples, {0.5, 0.25, 0.25});
  CHECK(d.train.size() == 4);
  CHECK(d.val.front().x[0] > d.train.back().x[0]);
  CHECK(d.test.front().x[0] > d.val.back().x[0]);
}

TEST_CASE("interval mask around the gap target's turning points") {
  const IntervalMask mask{find_turning_points(target_exp2_gap, -2, 2), 0.15};
  CHECK(mask.centers.size() == 6);
  // Neighbouring zones overlap, so the union has fewer connected pieces.
  CHECK(interval_mask_components(mask) == 5);

  const auto samples = grid_samples(target_exp2_gap, -2, 2, 400);
  Rng rng(10);
  const SplitDataset d = make_masked_split(samples, mask, 0.7, rng);
  for (const Sample& s : d.train) {
    for (double c : mask.centers) CHECK(std::abs(s.x[0] - c) > 0.15);
  }
  for (const Sample& s : d.test) CHECK(mask_contains(mask, s.x));
  CHECK(d.train.size() + d.val.size() + d.test.size() == 400);
}

TEST_CASE("disk mask soundness") {
  Rng gen(4);
  const auto samples = uniform_samples_2d(target_2d_missing_disk, -0.8, 0.8, 3000, gen);
  const DiskMask mask{{0, 0}, 0.3};
  const MaskedSamples parts = apply_mask(samples, mask);
  CHECK(parts.visible.size() + parts.hidden.size() == samples.size());
  for (const Sample& s : parts.hidden) CHECK(s.x[0] * s.x[0] + s.x[1] * s.x[1] <= 0.09);
  for (const Sample& s : parts.visible) CHECK(s.x[0] * s.x[0] + s.x[1] * s.x[1] > 0.09);

  Rng rng(10);
  const SplitDataset d = make_masked_split(samples, mask, 0.6, rng);
  CHECK(d.test.size() == parts.hidden.size());
  const double ratio = double(d.train.size()) / double(d.train.size() + d.val.size());
  CHECK(ratio == doctest::Approx(0.6).epsilon(0.01));
}

TEST_CASE("mask validation") {
  CHECK_THROWS_AS(validate_mask(IntervalMask{{0.0}, 0.0}), ValidationError);
  CHECK_THROWS_AS(validate_mask(DiskMask{{0, 0}, -1}), ValidationError);
  const std::vector<double> wrong_dim{0.0};
  CHECK_THROWS_AS(mask_contains(DiskMask{}, wrong_dim), LengthMismatch);
}

TEST_CASE("scaler") {
  const std::vector<double> v{0, 10};
  const ScalerState s = scaler_fit(v);
  CHECK(scaler_apply(s, 5) == 0.5);
  const std::vector<double> w{2, 4};
  const ScalerState t = scaler_fit(w, -1, 1);
  CHECK(scaler_apply(t, 2) == -1.0);
  CHECK(scaler_apply(t, 4) == 1.0);
  CHECK(scaler_unit(t) == 1.0);
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.uniform(-1e3, 1e3);
    CHECK(std::abs(scaler_invert(s, scaler_apply(s, x)) - x) <= 1e-12 * std::max(1.0, std::abs(x)));
  }
  const std::vector<double> flat{3, 3, 3};
  CHECK_THROWS_AS(scaler_fit(flat), DegenerateRange);
  CHECK_THROWS_AS(scaler_fit(v, 1, 0), ValidationError);
}

TEST_CASE("decomposition of a constructed series") {
  const double pattern[] = {0.8, 1.1, 1.3, 0.9, 0.7, 1.2};  // mean 1
  const double c = 42.0;
  std::vector<double> series;
  for (int t = 0; t < 60; ++t) series.push_back(c * pattern[t % 6]);
  const Decomposition d = seasonal_decompose_multiplicative(series, 6);
  std::size_t defined = 0;
  for (std::size_t t = 0; t < series.size(); ++t) {
    CHECK(std::abs(d.seasonal[t] - pattern[t % 6]) < 1e-9);
    if (!d.trend[t]) continue;
    ++defined;
    CHECK(std::abs(*d.trend[t] - c) < 1e-9 * c);
    CHECK(std::abs(*d.residual[t] - 1.0) < 1e-9);
  }
  CHECK(defined == 54);
  CHECK(!d.trend[2]);
  CHECK(d.trend[3]);
}

TEST_CASE("decomposition reconstructs arbitrary positive series") {
  Rng rng(17);
  for (std::size_t period : {2, 3, 4, 7, 12}) {
    std::vector<double> series;
    for (int t = 0; t < 50; ++t) series.push_back(rng.uniform(0.5, 20.0) + 0.1 * t);
    const Decomposition d = seasonal_decompose_multiplicative(series, period);
    double mean = 0;
    for (std::size_t j = 0; j < period; ++j) mean += d.seasonal[j];
    CHECK(std::abs(mean / period - 1.0) < 1e-9);
    for (std::size_t t = 0; t < series.size(); ++t) {
      if (!d.trend[t]) continue;
      const double back = *d.trend[t] * d.seasonal[t] * *d.residual[t];
      CHECK(std::abs(back - series[t]) < 1e-9 * series[t]);
    }
  }
}

TEST_CASE("decomposition edge cases") {
  const std::vector<double> constant(24, 5.0);
  const Decomposition d = seasonal_decompose_multiplicative(constant, 12);
  for (std::size_t t = 0; t < 24; ++t) {
    CHECK(d.seasonal[t] == doctest::Approx(1.0).epsilon(1e-15));
    if (d.residual[t]) CHECK(*d.residual[t] == doctest::Approx(1.0).epsilon(1e-15));
  }
  std::vector<double> with_zero(24, 1.0);
  with_zero[5] = 0.0;
  CHECK_THROWS_AS(seasonal_decompose_multiplicative(with_zero, 12), NonPositiveValue);
  CHECK_THROWS_AS(seasonal_decompose_multiplicative(constant, 13), ValidationError);
  CHECK_THROWS_AS(seasonal_decompose_multiplicative(constant, 1), ValidationError);
}

TEST_CASE("lag windows") {
  const std::vector<double> s{1, 2, 3, 4, 5};
  const auto w = lag_window_samples(s, 2);
  REQUIRE(w.size() == 3);
  CHECK(w[0].x == std::vector<double>{1, 2});
  CHECK(w[0].y == 3);
  CHECK(w[2].y == 5);
  CHECK_THROWS_AS(lag_window_samples(s, 5), ValidationError);
}

TEST_CASE("series csv") {
  CHECK(load_series_csv(write_temp("ok.csv", "t,y\n0,1.5\n1,2.5\n"), "y") ==
        std::vector<double>{1.5, 2.5});
  CHECK(load_series_csv(write_temp("bom.csv", "\xEF\xBB\xBFy\r\n3\r\n"), "y") ==
        std::vector<double>{3.0});

  try {
    load_series_csv(write_temp("cols.csv", "t,value\n0,1\n"), "y");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("value") != std::string::npos);
  }

  std::string bad = "t,y\n";
  for (int r = 1; r <= 6; ++r) bad += std::to_string(r) + ",1\n";
  bad += "7,abc\n";
  try {
    load_series_csv(write_temp("bad.csv", bad), "y");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("row 7") != std::string::npos);
  }
  CHECK_THROWS_AS(load_series_csv("/nonexistent/series.csv", "y"), IoError);
}

TEST_CASE("dataset csv") {
  SplitDataset d;
  d.m = 2;
  d.train.push_back({{0.5, -1.0}, 2.0});
  d.test.push_back({{0.0, 0.25}, -3.5});
  std::ostringstream out;
  write_dataset_csv(d, out);
  CHECK(out.str() == "split,x0,x1,y\ntrain,0.5,-1,2\ntest,0,0.25,-3.5\n");
}
