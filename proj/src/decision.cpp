#include "ivnsoft/decision.hpp"

#include "ivnsoft/errors.hpp"

namespace ivnsoft {

DecisionRule DecisionRule::of(RuleKind kind, ComparisonMode mode) {
  DecisionRule r;
  r.kind = kind;
  r.mode = mode;
  return r;
}

DecisionRule DecisionRule::constant_cut(IvnNumber cut, ComparisonMode mode) {
  DecisionRule r = of(RuleKind::constant, mode);
  r.constant = std::move(cut);
  return r;
}

DecisionRule DecisionRule::explicit_cut(ThresholdSet cuts, ComparisonMode mode) {
  DecisionRule r = of(RuleKind::explicit_set, mode);
  r.cuts = std::move(cuts);
  return r;
}

std::string DecisionRule::label() const {
  switch (kind) {
    case RuleKind::avg: return "avg";
    case RuleKind::max_min_min: return "Mmm";
    case RuleKind::min_min_min: return "mmm";
    case RuleKind::max_max_max: return "MMM";
    case RuleKind::constant: return "constant";
    case RuleKind::explicit_set: return "explicit";
  }
  return "unknown";
}

std::string_view to_string(ComparisonMode mode) {
  return mode == ComparisonMode::dominance ? "dominance" : "all-geq";
}

ThresholdSet resolve_threshold(const IvnSoftSet& s, const DecisionRule& rule) {
  ThresholdSet t;
  switch (rule.kind) {
    case RuleKind::avg: t = avg_threshold(s); break;
    case RuleKind::max_min_min: t = extremum_threshold(s, ExtremumRule::max_min_min); break;
    case RuleKind::min_min_min: t = extremum_threshold(s, ExtremumRule::min_min_min); break;
    case RuleKind::max_max_max: t = extremum_threshold(s, ExtremumRule::max_max_max); break;
    case RuleKind::constant:
      if (!rule.constant) throw Error("constant decision rule without <alpha, beta, gamma>");
      t = constant_threshold(s.parameters(), rule.constant->truth, rule.constant->indeterminacy,
                             rule.constant->falsity);
      break;
    case RuleKind::explicit_set:
      if (!rule.cuts) throw Error("explicit decision rule without a threshold set");
      t = *rule.cuts;
      break;
  }
  if (rule.round_digits) t = round_cuts(t, *rule.round_digits, Rounding::truncate);
  return t;
}

DecisionReport decide(const IvnSoftSet& s, const DecisionRule& rule) {
  LevelSoftSet level = level_soft_set(s, resolve_threshold(s, rule), rule.mode);
  ChoiceValues choices = choice_values(level.result);

  std::vector<std::string> optimal;
  const int best = choices.max_count();
  for (std::size_t i = 0; i < choices.objects.size(); ++i)
    if (choices.counts[i] == best) optimal.push_back(choices.objects[i]);

  DecisionReport report{rule, std::move(level), std::move(choices), std::move(optimal), std::nullopt, false, {}};
  if (report.optimal.size() == 1) report.unique_winner = report.optimal.front();

  if (rule.kind == RuleKind::max_max_max)
    report.notes.push_back("MMM threshold (max-max-max) is an extrapolation without a published definition");
  if (rule.mode == ComparisonMode::all_geq)
    report.notes.push_back("all-geq compatibility mode: every component endpoint compared with >=");
  if (rule.round_digits)
    report.notes.push_back("threshold endpoints truncated to " + std::to_string(*rule.round_digits) +
                           " decimals before comparison (compatibility)");
  if (!report.unique_winner)
    report.notes.push_back("no unique winner: " + std::to_string(report.optimal.size()) + " objects tied at c = " +
                           std::to_string(best));
  for (const auto& r : s.repairs())
    report.notes.push_back("input repaired at " + r.parameter + "/" + r.object + " " + r.component + ": " + r.message);
  return report;
}

DecisionReport group_decide(const IvnSoftSet& a, const IvnSoftSet& b, Combiner combiner, const DecisionRule& rule) {
  const PairedIvnSoftSet product = combiner == Combiner::conjunction ? and_product(a, b) : or_product(a, b);
  DecisionReport report = decide(product.set, rule);
  report.group_extension = true;
  report.notes.insert(report.notes.begin(),
                      std::string("group decision (extension): ") +
                          (combiner == Combiner::conjunction ? "AND" : "OR") +
                          " product over parameter pairs, then the single-set procedure");
  return report;
}

std::vector<DecisionRule> suggest_rethreshold(const DecisionReport& report) {
  if (report.unique_winner) throw NotTied(*report.unique_winner);

  auto make = [&](RuleKind kind) {
    DecisionRule r = DecisionRule::of(kind, report.rule.mode);
    r.round_digits = report.rule.round_digits;
    return r;
  };
  switch (report.rule.kind) {
    case RuleKind::avg: return {make(RuleKind::max_min_min)};
    case RuleKind::max_min_min: return {};
    case RuleKind::min_min_min:
    case RuleKind::max_max_max:
    case RuleKind::constant:
    case RuleKind::explicit_set: return {make(RuleKind::avg), make(RuleKind::max_min_min)};
  }
  return {};
}

}  // namespace ivnsoft
