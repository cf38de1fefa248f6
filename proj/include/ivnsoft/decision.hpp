#pragma once

#include "ivnsoft/crisp_soft.hpp"
#include "ivnsoft/levels.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ivnsoft {

enum class RuleKind { avg, max_min_min, min_min_min, max_max_max, constant, explicit_set };

/// Which threshold to build and how cells are compared against it.
struct DecisionRule {
  RuleKind kind = RuleKind::avg;
  ComparisonMode mode = ComparisonMode::dominance;
  /// <alpha, beta, gamma>; required when kind == constant.
  std::optional<IvnNumber> constant;
  /// Required when kind == explicit_set.
  std::optional<ThresholdSet> cuts;
  /// Compatibility: truncate cut endpoints to this many decimals before
  /// comparing. Exact comparison when empty.
  std::optional<int> round_digits;

  static DecisionRule of(RuleKind kind, ComparisonMode mode = ComparisonMode::dominance);
  static DecisionRule constant_cut(IvnNumber cut, ComparisonMode mode = ComparisonMode::dominance);
  static DecisionRule explicit_cut(ThresholdSet cuts, ComparisonMode mode = ComparisonMode::dominance);

  /// "avg", "Mmm", "mmm", "MMM", "constant" or "explicit".
  std::string label() const;

  friend bool operator==(const DecisionRule&, const DecisionRule&) = default;
};

std::string_view to_string(ComparisonMode mode);

/// Builds the rule's threshold over s.parameters(), rounded when requested.
ThresholdSet resolve_threshold(const IvnSoftSet& s, const DecisionRule& rule);

struct DecisionReport {
  DecisionRule rule;
  LevelSoftSet level;
  ChoiceValues choices;
  /// Objects attaining the maximum choice value, universe order.
  std::vector<std::string> optimal;
  /// Present iff optimal has exactly one element.
  std::optional<std::string> unique_winner;
  /// True for group decisions built from AND/OR products.
  bool group_extension = false;
  std::vector<std::string> notes;
};

/// Threshold, level soft set, choice values and argmax. Ties are reported
/// in full, never broken.
DecisionReport decide(const IvnSoftSet& s, const DecisionRule& rule);

enum class Combiner { conjunction, disjunction };

/// Forms and_product (conjunction) or or_product (disjunction) of a and b,
/// then runs `decide` with parameter pairs as parameters.
DecisionReport group_decide(const IvnSoftSet& a, const IvnSoftSet& b, Combiner combiner, const DecisionRule& rule);

/// Stricter rules to retry with when a decision is tied, in order:
/// avg -> [Mmm]; mmm -> [avg, Mmm]; constant, explicit and MMM -> [avg, Mmm];
/// Mmm -> []. Mode and rounding carry over. Throws NotTied when the report
/// has a unique winner.
std::vector<DecisionRule> suggest_rethreshold(const DecisionReport& report);

}  // namespace ivnsoft
