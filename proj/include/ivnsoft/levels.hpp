#pragma once

#include "ivnsoft/crisp_soft.hpp"
#include "ivnsoft/ivn_soft.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ivnsoft {

enum class ThresholdOrigin {
  constant,
  explicit_set,
  avg,
  max_min_min,  // "Mmm": max truth, min indeterminacy, min falsity
  min_min_min,  // "mmm"
  max_max_max,  // "MMM": extrapolated, has no published definition
};

std::string_view to_string(ThresholdOrigin origin);

/// Per-parameter cut used to turn an ivn-soft set into a crisp one.
struct ThresholdSet {
  std::vector<std::string> parameters;
  std::vector<IvnNumber> cuts;
  ThresholdOrigin origin = ThresholdOrigin::explicit_set;
  /// Set when cut components were rounded before use (compatibility only).
  std::optional<int> rounded_digits;

  const IvnNumber& cut(std::string_view parameter) const;
  bool extrapolated() const noexcept { return origin == ThresholdOrigin::max_max_max; }

  friend bool operator==(const ThresholdSet&, const ThresholdSet&) = default;
};

/// Every parameter maps to <alpha, beta, gamma>; beta bounds indeterminacy,
/// gamma bounds falsity.
ThresholdSet constant_threshold(std::vector<std::string> parameters, const Interval& alpha, const Interval& beta,
                                const Interval& gamma);

/// Throws SchemaError unless cuts.size() == parameters.size().
ThresholdSet explicit_threshold(std::vector<std::string> parameters, std::vector<IvnNumber> cuts);

/// Per parameter, the component-wise arithmetic mean of the row over the
/// universe. Exact; no clamping.
ThresholdSet avg_threshold(const IvnSoftSet& s, Execution exec = Execution::parallel);

enum class ExtremumRule { max_min_min, min_min_min, max_max_max };

/// Per parameter, component-wise extrema of the row:
///   max_min_min: T max, I min, F min
///   min_min_min: T min, I min, F min
///   max_max_max: T max, I max, F max (extrapolated)
ThresholdSet extremum_threshold(const IvnSoftSet& s, ExtremumRule rule, Execution exec = Execution::parallel);

/// Rounds every cut endpoint to `digits` decimals. Rounding is monotone, so
/// intervals stay valid.
ThresholdSet round_cuts(const ThresholdSet& t, int digits, Rounding mode = Rounding::truncate);

struct LevelSoftSet {
  CrispSoftSet result;
  ThresholdSet threshold;
  ComparisonMode mode = ComparisonMode::dominance;
  std::string source_digest;
};

/// Cell (x, u) is 1 iff satisfies(s(x, u), t.cut(x), mode). Throws
/// ThresholdMismatch when t's parameters differ from s's.
LevelSoftSet level_soft_set(const IvnSoftSet& s, const ThresholdSet& t, ComparisonMode mode,
                            Execution exec = Execution::parallel);

}  // namespace ivnsoft
