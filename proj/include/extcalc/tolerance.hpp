#pragma once

#include <algorithm>
#include <cmath>

namespace extcalc {

/// Comparison policy shared by every module: a value pair is "close" when
/// |a - b| <= max(rel * max(|a|, |b|), abs_floor).
struct Tolerance {
  double rel = 1e-9;
  double abs_floor = 1e-12;

  /// Residual normalised so that `close()` is exactly `residual <= rel`.
  [[nodiscard]] double relative(double diff, double scale) const {
    return diff / std::max(scale, abs_floor / rel);
  }
  [[nodiscard]] bool close(double diff, double scale) const {
    return relative(diff, scale) <= rel;
  }
};

inline constexpr Tolerance kDefaultTolerance{};

}  // namespace extcalc
