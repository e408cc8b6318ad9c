#pragma once

#include <span>
#include <vector>

namespace cauchynet {

/// Affine min-max map of the observed range [min, max] onto
/// [range_lo, range_hi].
struct ScalerState {
  double min = 0.0;
  double max = 1.0;
  double range_lo = 0.0;
  double range_hi = 1.0;

  friend bool operator==(const ScalerState&, const ScalerState&) = default;
};

/// Throws DegenerateRange when the values do not span a positive interval,
/// ValidationError when range_hi <= range_lo.
ScalerState scaler_fit(std::span<const double> values, double range_lo = 0.0,
                       double range_hi = 1.0);

double scaler_apply(const ScalerState& s, double value);
double scaler_invert(const ScalerState& s, double scaled);

/// Factor by which scaled-space distances must be multiplied to recover
/// original units.
double scaler_unit(const ScalerState& s);

}  // namespace cauchynet
