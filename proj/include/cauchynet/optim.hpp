#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "cauchynet/complex_linalg.hpp"
#include "cauchynet/dataset.hpp"
#include "cauchynet/errors.hpp"
#include "cauchynet/grad.hpp"

namespace cauchynet {

struct CauchyNetModel;

struct TrainConfig {
  std::size_t epochs = 200;
  std::size_t batch_size = 32;
  double lr0 = 0.01;
  double lr_decay_factor = 0.5;
  std::size_t lr_decay_every = 100;
  double weight_decay = 1e-4;
  double lambda = 0.1;
  std::uint64_t seed = 10;

  void validate() const;
};

struct AdamState {
  std::vector<double> m1;
  std::vector<double> m2;
  std::size_t t = 0;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps_adam = 1e-8;

  explicit AdamState(std::size_t parameter_size = 0)
      : m1(parameter_size, 0.0), m2(parameter_size, 0.0) {}
};

struct EpochRecord {
  std::size_t epoch = 0;
  double lr = 0.0;
  double train_loss = 0.0;
  double val_loss = 0.0;
  double wall_ms = 0.0;
};

struct TrainLog {
  std::vector<EpochRecord> epochs;
};

/// CSV with header epoch,lr,train_loss,val_loss,wall_ms. Epochs are 1-based.
void write_trainlog_csv(const TrainLog& log, std::ostream& out);

/// Thrown when a loss, gradient or parameter becomes non-finite. Carries the
/// log up to and including the failing epoch.
class TrainingDiverged : public NonFinite {
 public:
  TrainingDiverged(std::size_t epoch, TrainLog log, const std::string& cause);
  std::size_t epoch() const { return epoch_; }
  const TrainLog& log() const { return log_; }

 private:
  std::size_t epoch_;
  TrainLog log_;
};

/// lr0 * factor^floor(epoch / decay_every), epochs counted from 0.
double lr_at(const TrainConfig& config, std::size_t epoch);

/// Adam with bias correction on each real component. weight_decay * theta is
/// added to the raw gradient before the moment updates (coupled L2).
void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state,
               double lr, double weight_decay);

void adam_step(CauchyNetModel& model, const GradientSet& grads, AdamState& state, double lr,
               double weight_decay);

/// What the shared training harness needs from a model.
template <typename M>
concept TrainableModel =
    requires(M model, const M cmodel, std::span<double> out, std::span<const double> in,
             double y, double lambda) {
      { cmodel.input_dim() } -> std::convertible_to<std::size_t>;
      { cmodel.parameter_size() } -> std::convertible_to<std::size_t>;
      cmodel.gather(out);
      model.scatter(in);
      { cmodel.predict(in) } -> std::convertible_to<double>;
      { cmodel.evaluate_loss(in, y, lambda) } -> std::same_as<LossValue>;
      { cmodel.accumulate_gradient(in, y, lambda, out) } -> std::same_as<LossValue>;
    };

/// Mean squared error of the real prediction over a sample set.
template <TrainableModel M>
double mean_squared_error(const M& model, const std::vector<Sample>& samples) {
  if (samples.empty()) return 0.0;
  double sum = 0.0;
  for (const Sample& s : samples) {
    const double r = model.predict(s.x) - s.y;
    sum += r * r;
  }
  return sum / static_cast<double>(samples.size());
}

/// Called after every completed epoch with the fresh record.
template <typename M>
using EpochCallback = std::function<void(const M&, const EpochRecord&)>;

/// Shuffled minibatch Adam on the mean batch loss. Epoch e uses the sample
/// order from Rng(derive_seed(seed, e)). train_loss is the mean per-sample
/// loss seen during the epoch (before each batch update); val_loss is the
/// mean squared error of the real prediction on the validation split after
/// the epoch.
template <TrainableModel M>
TrainLog train(M& model, const SplitDataset& dataset, const TrainConfig& config,
               const EpochCallback<M>& on_epoch = {}) {
  config.validate();
  if (dataset.train.empty() || dataset.val.empty()) {
    throw ValidationError("training needs non-empty train and validation splits");
  }
  if (model.input_dim() != dataset.m) {
    throw ValidationError("model input dimension does not match dataset");
  }

  const auto start = std::chrono::steady_clock::now();
  const std::size_t n_params = model.parameter_size();
  std::vector<double> params(n_params);
  std::vector<double> grads(n_params);
  AdamState state(n_params);
  std::vector<std::size_t> order(dataset.train.size());
  TrainLog log;

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    EpochRecord rec;
    rec.epoch = epoch + 1;
    rec.lr = lr_at(config, epoch);
    try {
      std::iota(order.begin(), order.end(), std::size_t{0});
      Rng rng(Rng::derive_seed(config.seed, epoch));
      rng.shuffle(std::span<std::size_t>(order));

      double loss_sum = 0.0;
      for (std::size_t begin = 0; begin < order.size(); begin += config.batch_size) {
        const std::size_t end = std::min(order.size(), begin + config.batch_size);
        std::fill(grads.begin(), grads.end(), 0.0);
        for (std::size_t i = begin; i < end; ++i) {
          const Sample& s = dataset.train[order[i]];
          loss_sum += model.accumulate_gradient(s.x, s.y, config.lambda, grads).total;
        }
        const double inv = 1.0 / static_cast<double>(end - begin);
        for (double& g : grads) g *= inv;
        model.gather(params);
        adam_step(params, grads, state, rec.lr, config.weight_decay);
        model.scatter(params);
      }
      rec.train_loss = loss_sum / static_cast<double>(order.size());
      rec.val_loss = mean_squared_error(model, dataset.val);
      if (!std::isfinite(rec.train_loss) || !std::isfinite(rec.val_loss)) {
        throw NonFinite("loss is not finite");
      }
    } catch (const NonFinite& e) {
      rec.train_loss = rec.val_loss = std::numeric_limits<double>::quiet_NaN();
      rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             start).count();
      log.epochs.push_back(rec);
      throw TrainingDiverged(rec.epoch, std::move(log), e.what());
    }
    rec.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    log.epochs.push_back(rec);
    if (on_epoch) on_epoch(model, rec);
  }
  return log;
}

}  // namespace cauchynet
