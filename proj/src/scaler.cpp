#include "cauchynet/scaler.hpp"

#include <algorithm>
#include <cmath>

#include "cauchynet/errors.hpp"

namespace cauchynet {

ScalerState scaler_fit(std::span<const double> values, double range_lo, double range_hi) {
  if (!(range_hi > range_lo)) throw ValidationError("scaler range_hi must exceed range_lo");
  if (values.empty()) throw DegenerateRange("scaler fit on an empty set");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (!std::isfinite(*lo) || !std::isfinite(*hi)) throw NonFinite("scaler fit on non-finite data");
  if (!(*hi > *lo)) throw DegenerateRange("scaler fit needs at least two distinct values");
  return {*lo, *hi, range_lo, range_hi};
}

double scaler_apply(const ScalerState& s, double value) {
  return s.range_lo + (value - s.min) * (s.range_hi - s.range_lo) / (s.max - s.min);
}

double scaler_invert(const ScalerState& s, double scaled) {
  return s.min + (scaled - s.range_lo) * (s.max - s.min) / (s.range_hi - s.range_lo);
}

double scaler_unit(const ScalerState& s) {
  return (s.max - s.min) / (s.range_hi - s.range_lo);
}

}  // namespace cauchynet
