#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "cauchynet/errors.hpp"
#include "cauchynet/experiment.hpp"
#include "cauchynet/optim.hpp"

using namespace cauchynet;

namespace {

// Scalar model y = theta for the harness concept.
struct Scalar {
  double theta = 0.0;
  std::size_t input_dim() const { return 1; }
  std::size_t parameter_size() const { return 1; }
  void gather(std::span<double> out) const { out[0] = theta; }
  void scatter(std::span<const double> in) { theta = in[0]; }
  double predict(std::span<const double>) const { return theta; }
  LossValue evaluate_loss(std::span<const double> x, double y, double l) const {
    return loss(predict(x), 0.0, y, l);
  }
  LossValue accumulate_gradient(std::span<const double> x, double y, double l,
                                std::span<double> grad) const {
    grad[0] += 2.0 * (theta - y);
    return evaluate_loss(x, y, l);
  }
};
static_assert(TrainableModel<Scalar>);
static_assert(TrainableModel<CauchyNetModel>);

SplitDataset intro_data() {
  ExperimentSpec spec = preset("intro-spike");
  return build_dataset(spec).data;
}

}  // namespace

TEST_CASE("learning-rate schedule") {
  TrainConfig c;
  CHECK(lr_at(c, 0) == 0.01);
  CHECK(lr_at(c, 99) == 0.01);
  CHECK(lr_at(c, 100) == 0.005);
  CHECK(lr_at(c, 250) == 0.0025);
  double prev = lr_at(c, 0);
  for (std::size_t e = 1; e < 1000; ++e) {
    CHECK(lr_at(c, e) <= prev);
    prev = lr_at(c, e);
  }
}

TEST_CASE("config validation") {
  TrainConfig c;
  c.epochs = 0;
  CHECK_THROWS_AS(c.validate(), ValidationError);
  c = {};
  c.batch_size = 0;
  CHECK_THROWS_AS(c.validate(), ValidationError);
  c = {};
  c.lambda = -1;
  CHECK_THROWS_AS(c.validate(), ValidationError);
  c = {};
  c.lr_decay_factor = 1.5;
  CHECK_THROWS_AS(c.validate(), ValidationError);
}

TEST_CASE("adam fixed point and first step") {
  std::vector<double> p{1.0, -2.0};
  const std::vector<double> zero{0.0, 0.0};
  AdamState s(2);
  adam_step(p, zero, s, 0.1, 0.0);
  CHECK(p == std::vector<double>{1.0, -2.0});

  AdamState s2(2);
  std::vector<double> q{0.0, 0.0};
  const std::vector<double> g{0.5, -4.0};
  adam_step(q, g, s2, 0.01, 0.0);
  CHECK(q[0] == doctest::Approx(-0.01 * 0.5 / (0.5 + 1e-8)));
  CHECK(q[1] == doctest::Approx(0.01 * 4.0 / (4.0 + 1e-8)));
}

TEST_CASE("adam weight decay is coupled") {
  std::vector<double> p{2.0};
  const std::vector<double> g{0.0};
  AdamState s(1);
  adam_step(p, g, s, 0.1, 0.5);
  CHECK(p[0] == doctest::Approx(2.0 - 0.1));
}

TEST_CASE("adam on a scalar quadratic") {
  std::vector<double> theta{0.0};
  AdamState s(1);
  for (int i = 0; i < 200; ++i) {
    const std::vector<double> g{2.0 * (theta[0] - 3.0)};
    adam_step(theta, g, s, 0.05, 0.0);
  }
  CHECK(std::abs(theta[0] - 3.0) < 1e-2);
}

TEST_CASE("adam rejects mismatched shapes") {
  std::vector<double> p(3);
  const std::vector<double> g(2);
  AdamState s(3);
  CHECK_THROWS_AS(adam_step(p, g, s, 0.1, 0.0), LengthMismatch);
}

TEST_CASE("harness trains a scalar model") {
  SplitDataset d;
  d.m = 1;
  for (int i = 0; i < 10; ++i) d.train.push_back({{0.0}, 3.0});
  d.val.push_back({{0.0}, 3.0});
  TrainConfig c;
  c.epochs = 100;
  c.batch_size = 4;
  c.lr0 = 0.1;
  c.weight_decay = 0.0;
  Scalar m;
  const TrainLog log = train(m, d, c);
  CHECK(log.epochs.size() == 100);
  CHECK(log.epochs.front().epoch == 1);
  CHECK(std::abs(m.theta - 3.0) < 0.05);
  c.epochs = 0;
  CHECK_THROWS_AS(train(m, d, c), ValidationError);
}

TEST_CASE("intro spike training improves tenfold and is deterministic") {
  const SplitDataset data = intro_data();
  TrainConfig c = preset("intro-spike").train;
  Rng rng(7);
  CauchyNetModel a = init_xavier_complex(128, 1, rng);
  CauchyNetModel b = a;

  std::vector<double> mean_abs_e;
  const TrainLog la = train<CauchyNetModel>(a, data, c, [&](const CauchyNetModel& m, const EpochRecord& r) {
    if (r.epoch != 1 && r.epoch != c.epochs) return;
    double sum = 0;
    for (const Sample& s : data.val) sum += std::abs(forward(m, s.x).e);
    mean_abs_e.push_back(sum / data.val.size());
  });
  const TrainLog lb = train(b, data, c);
  CHECK(la.epochs.back().train_loss * 10.0 <= la.epochs.front().train_loss);
  CHECK(mean_abs_e.back() < mean_abs_e.front());
  CHECK(a == b);
  REQUIRE(la.epochs.size() == lb.epochs.size());
  for (std::size_t i = 0; i < la.epochs.size(); ++i) {
    CHECK(la.epochs[i].train_loss == lb.epochs[i].train_loss);
    CHECK(la.epochs[i].val_loss == lb.epochs[i].val_loss);
  }
}

TEST_CASE("divergence carries the partial log") {
  SplitDataset d;
  d.m = 1;
  d.train.push_back({{0.0}, 1.0});
  d.val.push_back({{0.0}, 1.0});
  CauchyNetModel m(1, 1, 0.0);
  m.bias(0, 0) = {1e-300, 0};
  m.coeffs[0] = 1.0;
  TrainConfig c;
  c.epochs = 5;
  try {
    train(m, d, c);
    FAIL("expected divergence");
  } catch (const TrainingDiverged& e) {
    CHECK(e.epoch() == 1);
    CHECK(e.log().epochs.size() == 1);
    CHECK(std::isnan(e.log().epochs[0].train_loss));
  }
}

TEST_CASE("trainlog csv") {
  TrainLog log;
  log.epochs.push_back({1, 0.01, 0.5, 0.25, 3.14159});
  std::ostringstream out;
  write_trainlog_csv(log, out);
  CHECK(out.str() == "epoch,lr,train_loss,val_loss,wall_ms\n1,0.01,0.5,0.25,3.142\n");
}
