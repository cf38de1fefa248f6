#include "ivnsoft/levels.hpp"

#include "ivnsoft/detail/identifiers.hpp"
#include "ivnsoft/errors.hpp"

#include <cstdint>

namespace ivnsoft {
namespace {

Interval extremum(std::span<const IvnNumber> row, Interval IvnNumber::*component, Pointwise kind) {
  Interval acc = row.front().*component;
  for (const auto& cell : row.subspan(1)) acc = combine(acc, cell.*component, kind);
  return acc;
}

Interval component_mean(std::span<const IvnNumber> row, Interval IvnNumber::*component) {
  std::vector<Interval> items;
  items.reserve(row.size());
  for (const auto& cell : row) items.push_back(cell.*component);
  return mean(items);
}

Interval round_interval(const Interval& x, int digits, Rounding mode) {
  return Interval(x.lo().rounded(digits, mode), x.hi().rounded(digits, mode));
}

}  // namespace

std::string_view to_string(ThresholdOrigin origin) {
  switch (origin) {
    case ThresholdOrigin::constant: return "constant";
    case ThresholdOrigin::explicit_set: return "explicit";
    case ThresholdOrigin::avg: return "avg";
    case ThresholdOrigin::max_min_min: return "Mmm";
    case ThresholdOrigin::min_min_min: return "mmm";
    case ThresholdOrigin::max_max_max: return "MMM";
  }
  return "unknown";
}

const IvnNumber& ThresholdSet::cut(std::string_view parameter) const {
  return cuts.at(detail::index_of(parameters, parameter, "parameter"));
}

ThresholdSet constant_threshold(std::vector<std::string> parameters, const Interval& alpha, const Interval& beta,
                                const Interval& gamma) {
  const std::size_t n = parameters.size();
  return {std::move(parameters), std::vector<IvnNumber>(n, IvnNumber{alpha, beta, gamma}), ThresholdOrigin::constant,
          std::nullopt};
}

ThresholdSet explicit_threshold(std::vector<std::string> parameters, std::vector<IvnNumber> cuts) {
  if (cuts.size() != parameters.size()) throw SchemaError("threshold must give exactly one cut per parameter");
  detail::require_unique(parameters, "parameter");
  return {std::move(parameters), std::move(cuts), ThresholdOrigin::explicit_set, std::nullopt};
}

ThresholdSet avg_threshold(const IvnSoftSet& s, Execution exec) {
  std::vector<IvnNumber> cuts(s.parameters().size());
  kernels::for_each_index(cuts.size(), exec, [&](std::size_t p) {
    const auto row = s.row(p);
    cuts[p] = {component_mean(row, &IvnNumber::truth), component_mean(row, &IvnNumber::indeterminacy),
               component_mean(row, &IvnNumber::falsity)};
  }, s.universe().size());
  return {s.parameters(), std::move(cuts), ThresholdOrigin::avg, std::nullopt};
}

ThresholdSet extremum_threshold(const IvnSoftSet& s, ExtremumRule rule, Execution exec) {
  const Pointwise truth = rule == ExtremumRule::min_min_min ? Pointwise::min : Pointwise::max;
  const Pointwise rest = rule == ExtremumRule::max_max_max ? Pointwise::max : Pointwise::min;
  std::vector<IvnNumber> cuts(s.parameters().size());
  kernels::for_each_index(cuts.size(), exec, [&](std::size_t p) {
    const auto row = s.row(p);
    cuts[p] = {extremum(row, &IvnNumber::truth, truth), extremum(row, &IvnNumber::indeterminacy, rest),
               extremum(row, &IvnNumber::falsity, rest)};
  }, s.universe().size());
  ThresholdOrigin origin = ThresholdOrigin::max_min_min;
  if (rule == ExtremumRule::min_min_min) origin = ThresholdOrigin::min_min_min;
  if (rule == ExtremumRule::max_max_max) origin = ThresholdOrigin::max_max_max;
  return {s.parameters(), std::move(cuts), origin, std::nullopt};
}

ThresholdSet round_cuts(const ThresholdSet& t, int digits, Rounding mode) {
  ThresholdSet out = t;
  for (auto& c : out.cuts) {
    c = {round_interval(c.truth, digits, mode), round_interval(c.indeterminacy, digits, mode),
         round_interval(c.falsity, digits, mode)};
  }
  out.rounded_digits = digits;
  return out;
}

LevelSoftSet level_soft_set(const IvnSoftSet& s, const ThresholdSet& t, ComparisonMode mode, Execution exec) {
  if (t.parameters != s.parameters())
    throw ThresholdMismatch("threshold parameters do not match the ivn-soft set's parameters");
  if (t.cuts.size() != t.parameters.size()) throw ThresholdMismatch("threshold is not total over its parameters");

  const std::size_t nu = s.universe().size();
  std::vector<std::uint8_t> bits(s.cells().size());
  kernels::for_each_index(bits.size(), exec,
                          [&](std::size_t i) { bits[i] = satisfies(s.cells()[i], t.cuts[i / nu], mode) ? 1 : 0; });

  CrispSoftSet result(s.universe(), s.parameters());
  for (std::size_t i = 0; i < bits.size(); ++i) result.set(i / nu, i % nu, bits[i] != 0);
  return {std::move(result), t, mode, digest(s)};
}

}  // namespace ivnsoft
