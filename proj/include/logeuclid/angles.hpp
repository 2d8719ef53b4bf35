#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

namespace logeuclid {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
/// Total angle around the ramification point.
inline constexpr double kFourPi = 4.0 * std::numbers::pi;

/// Default tolerance for lengths (relative, floored at 1) and angles (absolute).
inline constexpr double kEpsilon = 1e-9;

inline bool nearly_equal(double a, double b, double eps = kEpsilon) {
  return std::abs(a - b) <= eps * std::max({1.0, std::abs(a), std::abs(b)});
}

/// Reduces x modulo `period` into [0, period).
inline double wrap_positive(double x, double period) {
  double y = std::fmod(x, period);
  if (y < 0.0) y += period;
  if (y >= period) y = 0.0;
  return y;
}

/// Total angle on the double cover, in [0, 4pi).
inline double normalize_total_angle(double phi) { return wrap_positive(phi, kFourPi); }

/// Chart-level angle in (-pi, pi].
inline double wrap_half_turn(double x) {
  double y = wrap_positive(x, kTwoPi);
  return y > kPi ? y - kTwoPi : y;
}

/// Counter-clockwise gap from `from` to `to` on the 4pi circle, mapped to
/// (-2pi, 2pi]. Its magnitude is the minimal gap except at exactly 2pi.
inline double signed_gap(double from, double to) {
  double ccw = wrap_positive(to - from, kFourPi);
  return ccw > kTwoPi ? ccw - kFourPi : ccw;
}

/// Circular distance on the 4pi circle, in [0, 2pi].
inline double circular_distance(double a, double b) {
  double ccw = wrap_positive(b - a, kFourPi);
  return std::min(ccw, kFourPi - ccw);
}

inline bool angles_equal(double a, double b, double eps = kEpsilon) {
  return circular_distance(a, b) <= eps;
}

}  // namespace logeuclid
