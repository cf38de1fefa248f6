#pragma once

#include "ivnsoft/scalar.hpp"

#include <span>
#include <string>
#include <vector>

namespace ivnsoft {

enum class Validation { strict, lenient };

/// Closed sub-interval [lo, hi] of the unit interval with exact endpoints.
/// Every constructed value satisfies 0 <= lo <= hi <= 1.
class Interval {
 public:
  /// Degenerate [0, 0].
  Interval() = default;
  /// Throws InvalidInterval unless 0 <= lo <= hi <= 1.
  Interval(Scalar lo, Scalar hi);

  static Interval point(const Scalar& v) { return Interval(v, v); }
  static Interval zero() { return Interval(); }
  static Interval unit() { return Interval(Scalar(1), Scalar(1)); }

  const Scalar& lo() const noexcept { return lo_; }
  const Scalar& hi() const noexcept { return hi_; }

  /// "[lo,hi]" with exact endpoint text.
  std::string to_string() const;
  /// "[0.55,0.8]" style, rounded for display only.
  std::string to_display(int digits = 2, Rounding mode = Rounding::half_up) const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Scalar lo_{0};
  Scalar hi_{0};
};

struct RepairedInterval {
  Interval value;
  /// One entry per repair applied (clamp or swap); empty when input was valid.
  std::vector<std::string> notes;
};

/// Strict mode throws InvalidInterval on any violation. Lenient mode clamps
/// endpoints into [0,1], then swaps inverted endpoints, and records each fix.
RepairedInterval make_interval(const Scalar& lo, const Scalar& hi, Validation mode);

enum class Pointwise { min, max };
enum class ScaleKind { multiply, divide };

/// Endpoint-wise min or max.
Interval combine(const Interval& a, const Interval& b, Pointwise kind);

/// [min(a.lo + b.lo, 1), min(a.hi + b.hi, 1)]
Interval add_clamped(const Interval& a, const Interval& b);

/// Multiplies or divides both endpoints by c > 0, clamping at 1.
/// Throws NonPositiveScalar when c <= 0.
Interval scale_clamped(const Interval& a, const Scalar& c, ScaleKind kind);

/// [1 - hi, 1 - lo]
Interval complement_unit(const Interval& a);

/// Component-wise arithmetic mean without clamping. Throws EmptySequence.
Interval mean(std::span<const Interval> items);

}  // namespace ivnsoft
