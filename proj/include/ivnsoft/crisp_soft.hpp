#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ivnsoft {

/// Classical soft set stored as a 0/1 table, parameters as rows and objects
/// as columns.
class CrispSoftSet {
 public:
  /// All-zero table. Identifiers must be unique.
  CrispSoftSet(std::vector<std::string> universe, std::vector<std::string> parameters);

  /// Builds the table from parameter -> subset. Parameters missing from
  /// `subsets` map to the empty set; unknown names throw SchemaError.
  static CrispSoftSet from_subsets(std::vector<std::string> universe, std::vector<std::string> parameters,
                                   const std::map<std::string, std::vector<std::string>>& subsets);

  const std::vector<std::string>& universe() const noexcept { return universe_; }
  const std::vector<std::string>& parameters() const noexcept { return parameters_; }

  bool contains(std::size_t param, std::size_t object) const { return table_[param * universe_.size() + object] != 0; }
  void set(std::size_t param, std::size_t object, bool member) {
    table_[param * universe_.size() + object] = member ? 1 : 0;
  }

  /// Objects of row `param`, in universe order.
  std::vector<std::string> subset(std::size_t param) const;
  /// Subset view keyed by parameter name, omitting empty rows.
  std::map<std::string, std::vector<std::string>> nonempty_rows() const;
  std::size_t ones() const;

  friend bool operator==(const CrispSoftSet&, const CrispSoftSet&) = default;

 private:
  std::vector<std::string> universe_;
  std::vector<std::string> parameters_;
  std::vector<std::uint8_t> table_;
};

struct ChoiceValues {
  /// Universe order.
  std::vector<std::string> objects;
  std::vector<int> counts;
  /// Objects by descending count; equal counts keep universe order.
  std::vector<std::string> ranking;
  /// Equal-count groups, highest count first.
  std::vector<std::vector<std::string>> tiers;

  int count(std::string_view object) const;
  int max_count() const;
};

/// c_i = number of parameters whose row contains object i.
ChoiceValues choice_values(const CrispSoftSet& s);

CrispSoftSet crisp_union(const CrispSoftSet& a, const CrispSoftSet& b);
CrispSoftSet crisp_intersection(const CrispSoftSet& a, const CrispSoftSet& b);
CrispSoftSet crisp_complement(const CrispSoftSet& a);
/// Row-wise inclusion: every 1-cell of `a` is a 1-cell of `b`.
bool crisp_subset(const CrispSoftSet& a, const CrispSoftSet& b);

/// Fixed-width 0/1 grid; the header row starts with "U".
std::string render_table(const CrispSoftSet& s);

}  // namespace ivnsoft
