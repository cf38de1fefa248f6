#pragma once

#include "ivnsoft/decision.hpp"
#include "ivnsoft/ivn_soft.hpp"
#include "ivnsoft/levels.hpp"

#include "json.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ivnsoft::io {

// Dataset document:
//
//   {
//     "universe": ["u1", "u2"],
//     "parameters": ["x1", "x2"],
//     "values": {
//       "x1": {"u1": {"T": ["0.6", "0.8"], "I": ["0.8", "0.9"], "F": ["0.1", "0.5"]}, ...},
//       ...
//     }
//   }
//
// Degrees are decimal text ("0.55") or fractions ("19/60"). JSON numbers are
// accepted and re-read through their shortest decimal spelling.

struct DatasetIssue {
  enum class Kind { schema, interval };
  Kind kind = Kind::schema;
  /// "x5/u4 F" style location, empty for document-level problems.
  std::string where;
  std::string message;
  /// Offending endpoint texts, interval issues only.
  std::string lo;
  std::string hi;
};

/// Every problem found in the document; empty when it loads in `mode`.
std::vector<DatasetIssue> check_dataset(std::string_view text, Validation mode);

/// Throws SchemaError or InvalidInterval (strict) for the first issue found.
/// Lenient loading records one RepairNote per repaired component.
IvnSoftSet parse_dataset(std::string_view text, Validation mode);

/// Canonical text: identifiers in set order, one cell per line, degrees in
/// their shortest exact spelling. parse_dataset(serialize_dataset(s)) == s.
std::string serialize_dataset(const IvnSoftSet& s);

nlohmann::ordered_json dataset_document(const IvnSoftSet& s);

// Threshold document: {"parameters": [...], "origin": "avg",
// "cuts": {"x1": {"T": [...], "I": [...], "F": [...]}, ...}}.
nlohmann::ordered_json threshold_document(const ThresholdSet& t);
ThresholdSet parse_threshold(std::string_view text);

nlohmann::ordered_json report_document(const DecisionReport& report, const std::vector<const IvnSoftSet*>& inputs,
                                       int digits = 2);

/// Parameters as rows, objects as columns, "<[lo,hi], [lo,hi], [lo,hi]>" cells.
std::string render_ivn_table(const IvnSoftSet& s, int digits = 2);
std::string render_threshold(const ThresholdSet& t, int digits = 2);
std::string render_report(const DecisionReport& report, int digits = 2);

}  // namespace ivnsoft::io
