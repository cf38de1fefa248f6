#include "ivnsoft/interval.hpp"

#include "ivnsoft/errors.hpp"

namespace ivnsoft {
namespace {

bool in_unit(const Scalar& v) { return Scalar(0) <= v && v <= Scalar(1); }

Scalar clamp_unit(const Scalar& v) { return min(max(v, Scalar(0)), Scalar(1)); }

}  // namespace

Interval::Interval(Scalar lo, Scalar hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!in_unit(lo_) || !in_unit(hi_) || hi_ < lo_) throw InvalidInterval(lo_.to_string(), hi_.to_string());
}

std::string Interval::to_string() const { return "[" + lo_.to_string() + "," + hi_.to_string() + "]"; }

std::string Interval::to_display(int digits, Rounding mode) const {
  return "[" + lo_.to_display(digits, mode) + "," + hi_.to_display(digits, mode) + "]";
}

RepairedInterval make_interval(const Scalar& lo, const Scalar& hi, Validation mode) {
  if (mode == Validation::strict) return {Interval(lo, hi), {}};

  RepairedInterval out;
  Scalar a = clamp_unit(lo);
  Scalar b = clamp_unit(hi);
  if (a != lo) out.notes.push_back("clamped lower bound " + lo.to_string() + " -> " + a.to_string());
  if (b != hi) out.notes.push_back("clamped upper bound " + hi.to_string() + " -> " + b.to_string());
  if (b < a) {
    out.notes.push_back("swapped inverted bounds [" + a.to_string() + "," + b.to_string() + "]");
    std::swap(a, b);
  }
  out.value = Interval(std::move(a), std::move(b));
  return out;
}

Interval combine(const Interval& a, const Interval& b, Pointwise kind) {
  if (kind == Pointwise::min) return Interval(min(a.lo(), b.lo()), min(a.hi(), b.hi()));
  return Interval(max(a.lo(), b.lo()), max(a.hi(), b.hi()));
}

Interval add_clamped(const Interval& a, const Interval& b) {
  return Interval(min(a.lo() + b.lo(), Scalar(1)), min(a.hi() + b.hi(), Scalar(1)));
}

Interval scale_clamped(const Interval& a, const Scalar& c, ScaleKind kind) {
  if (c <= Scalar(0)) throw NonPositiveScalar(c.to_string());
  if (kind == ScaleKind::multiply) return Interval(min(a.lo() * c, Scalar(1)), min(a.hi() * c, Scalar(1)));
  return Interval(min(a.lo() / c, Scalar(1)), min(a.hi() / c, Scalar(1)));
}

Interval complement_unit(const Interval& a) { return Interval(Scalar(1) - a.hi(), Scalar(1) - a.lo()); }

Interval mean(std::span<const Interval> items) {
  if (items.empty()) throw EmptySequence();
  Scalar lo;
  Scalar hi;
  for (const auto& it : items) {
    lo += it.lo();
    hi += it.hi();
  }
  const Scalar n(static_cast<std::int64_t>(items.size()));
  return Interval(lo / n, hi / n);
}

}  // namespace ivnsoft
