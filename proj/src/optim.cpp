#include "cauchynet/optim.hpp"

#include <cmath>
#include <iomanip>

#include "cauchynet/format.hpp"
#include "cauchynet/model.hpp"

namespace cauchynet {

void TrainConfig::validate() const {
  if (epochs < 1) throw ValidationError("epochs must be >= 1");
  if (batch_size < 1) throw ValidationError("batch_size must be >= 1");
  if (!(lr0 > 0.0)) throw ValidationError("lr0 must be > 0");
  if (!(lr_decay_factor > 0.0 && lr_decay_factor <= 1.0)) {
    throw ValidationError("lr_decay_factor must be in (0, 1]");
  }
  if (lr_decay_every < 1) throw ValidationError("lr_decay_every must be >= 1");
  if (!(weight_decay >= 0.0)) throw ValidationError("weight_decay must be >= 0");
  if (!(lambda >= 0.0)) throw ValidationError("lambda must be >= 0");
}

TrainingDiverged::TrainingDiverged(std::size_t epoch, TrainLog log, const std::string& cause)
    : NonFinite("training diverged at epoch " + std::to_string(epoch) + ": " + cause),
      epoch_(epoch),
      log_(std::move(log)) {}

double lr_at(const TrainConfig& config, std::size_t epoch) {
  const auto halvings = static_cast<double>(epoch / config.lr_decay_every);
  return config.lr0 * std::pow(config.lr_decay_factor, halvings);
}

void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state,
               double lr, double weight_decay) {
  if (params.size() != grads.size() || state.m1.size() != params.size() ||
      state.m2.size() != params.size()) {
    throw LengthMismatch("adam_step shapes disagree");
  }
  state.t += 1;
  const double t = static_cast<double>(state.t);
  const double correction1 = 1.0 - std::pow(state.beta1, t);
  const double correction2 = 1.0 - std::pow(state.beta2, t);
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double g = grads[i] + weight_decay * params[i];
    state.m1[i] = state.beta1 * state.m1[i] + (1.0 - state.beta1) * g;
    state.m2[i] = state.beta2 * state.m2[i] + (1.0 - state.beta2) * g * g;
    const double m_hat = state.m1[i] / correction1;
    const double v_hat = state.m2[i] / correction2;
    const double updated = params[i] - lr * m_hat / (std::sqrt(v_hat) + state.eps_adam);
    if (!std::isfinite(updated)) throw NonFinite("Adam update is not finite");
    params[i] = updated;
  }
}

void adam_step(CauchyNetModel& model, const GradientSet& grads, AdamState& state, double lr,
               double weight_decay) {
  if (grads.d_bias.rows() != model.hidden || grads.d_bias.cols() != model.inputs ||
      grads.d_coeffs.size() != model.hidden) {
    throw LengthMismatch("gradient shape does not match model");
  }
  std::vector<double> params(model.parameter_size());
  model.gather(params);
  const std::vector<double> flat = grads.flatten();
  adam_step(params, flat, state, lr, weight_decay);
  model.scatter(params);
}

void write_trainlog_csv(const TrainLog& log, std::ostream& out) {
  out << "epoch,lr,train_loss,val_loss,wall_ms\n";
  for (const EpochRecord& r : log.epochs) {
    out << r.epoch << ',' << format_double(r.lr) << ',' << format_double(r.train_loss) << ','
        << format_double(r.val_loss) << ',' << format_fixed(r.wall_ms, 3) << '\n';
  }
}

}  // namespace cauchynet
