#include "ivnsoft/ivn_number.hpp"

namespace ivnsoft {
namespace {

bool endpoints_leq(const Interval& a, const Interval& b) { return a.lo() <= b.lo() && a.hi() <= b.hi(); }

}  // namespace

std::string IvnNumber::to_string() const {
  return "<" + truth.to_string() + ", " + indeterminacy.to_string() + ", " + falsity.to_string() + ">";
}

std::string IvnNumber::to_display(int digits, Rounding mode) const {
  return "<" + truth.to_display(digits, mode) + ", " + indeterminacy.to_display(digits, mode) + ", " +
         falsity.to_display(digits, mode) + ">";
}

IvnNumber empty_value() { return {Interval::zero(), Interval::unit(), Interval::unit()}; }
IvnNumber universal_value() { return {Interval::unit(), Interval::zero(), Interval::zero()}; }
IvnNumber zero_value() { return {}; }

IvnNumber complement(const IvnNumber& x) { return {x.falsity, complement_unit(x.indeterminacy), x.truth}; }

bool dominates(const IvnNumber& x, const IvnNumber& y) {
  return endpoints_leq(x.truth, y.truth) && endpoints_leq(y.indeterminacy, x.indeterminacy) &&
         endpoints_leq(y.falsity, x.falsity);
}

bool satisfies(const IvnNumber& value, const IvnNumber& threshold, ComparisonMode mode) {
  if (mode == ComparisonMode::dominance) return dominates(threshold, value);
  return endpoints_leq(threshold.truth, value.truth) && endpoints_leq(threshold.indeterminacy, value.indeterminacy) &&
         endpoints_leq(threshold.falsity, value.falsity);
}

IvnNumber join(const IvnNumber& x, const IvnNumber& y) {
  return {combine(x.truth, y.truth, Pointwise::max), combine(x.indeterminacy, y.indeterminacy, Pointwise::min),
          combine(x.falsity, y.falsity, Pointwise::min)};
}

IvnNumber meet(const IvnNumber& x, const IvnNumber& y) {
  return {combine(x.truth, y.truth, Pointwise::min), combine(x.indeterminacy, y.indeterminacy, Pointwise::max),
          combine(x.falsity, y.falsity, Pointwise::max)};
}

IvnNumber difference(const IvnNumber& x, const IvnNumber& y) {
  const Interval& ix = x.indeterminacy;
  const Interval& iy = y.indeterminacy;
  Interval ind(max(ix.lo(), Scalar(1) - iy.hi()), max(ix.hi(), Scalar(1) - iy.lo()));
  return {combine(x.truth, y.falsity, Pointwise::min), std::move(ind), combine(x.falsity, y.truth, Pointwise::max)};
}

IvnNumber add(const IvnNumber& x, const IvnNumber& y) {
  return {add_clamped(x.truth, y.truth), add_clamped(x.indeterminacy, y.indeterminacy),
          add_clamped(x.falsity, y.falsity)};
}

IvnNumber scale(const IvnNumber& x, const Scalar& c, ScaleKind kind) {
  return {scale_clamped(x.truth, c, kind), scale_clamped(x.indeterminacy, c, kind), scale_clamped(x.falsity, c, kind)};
}

IvnNumber truth_favorite(const IvnNumber& x) {
  return {add_clamped(x.truth, x.indeterminacy), Interval::zero(), x.falsity};
}

IvnNumber false_favorite(const IvnNumber& x) {
  return {x.truth, Interval::zero(), add_clamped(x.falsity, x.indeterminacy)};
}

}  // namespace ivnsoft
