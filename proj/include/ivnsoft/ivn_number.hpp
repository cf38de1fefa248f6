#pragma once

#include "ivnsoft/interval.hpp"

#include <string>

namespace ivnsoft {

/// Interval-valued neutrosophic number: independent truth, indeterminacy and
/// falsity intervals. No constraint links the three components.
struct IvnNumber {
  Interval truth;
  Interval indeterminacy;
  Interval falsity;

  friend bool operator==(const IvnNumber&, const IvnNumber&) = default;

  std::string to_string() const;
  std::string to_display(int digits = 2, Rounding mode = Rounding::half_up) const;
};

/// <[0,0],[1,1],[1,1]>, bottom of the dominance order.
IvnNumber empty_value();
/// <[1,1],[0,0],[0,0]>, top of the dominance order.
IvnNumber universal_value();
/// <[0,0],[0,0],[0,0]>, identity of number addition.
IvnNumber zero_value();

enum class ComparisonMode {
  /// Truth endpoints must be >=, indeterminacy and falsity endpoints <=.
  dominance,
  /// Every endpoint of every component must be >=. Compatibility mode.
  all_geq,
};

/// (F, 1 - I, T)
IvnNumber complement(const IvnNumber& x);

/// True iff x <= y: truth of x below truth of y, indeterminacy and falsity
/// of x above those of y, all endpoint-wise. A partial order.
bool dominates(const IvnNumber& x, const IvnNumber& y);

/// Whether `value` passes the cut `threshold`.
bool satisfies(const IvnNumber& value, const IvnNumber& threshold, ComparisonMode mode);

/// Least upper bound under `dominates`: max T, min I, min F.
IvnNumber join(const IvnNumber& x, const IvnNumber& y);
/// Greatest lower bound: min T, max I, max F.
IvnNumber meet(const IvnNumber& x, const IvnNumber& y);

// The kernels below follow their defining formulas literally, asymmetries
// included.

/// T = min(T_x, F_y), I = [max(inf I_x, 1 - sup I_y), max(sup I_x, 1 - inf I_y)],
/// F = max(F_x, T_y).
IvnNumber difference(const IvnNumber& x, const IvnNumber& y);
IvnNumber add(const IvnNumber& x, const IvnNumber& y);
IvnNumber scale(const IvnNumber& x, const Scalar& c, ScaleKind kind);
/// (T + I clamped, [0,0], F)
IvnNumber truth_favorite(const IvnNumber& x);
/// (T, [0,0], F + I clamped)
IvnNumber false_favorite(const IvnNumber& x);

}  // namespace ivnsoft
