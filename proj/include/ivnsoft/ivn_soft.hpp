#pragma once

#include "ivnsoft/ivn_number.hpp"
#include "ivnsoft/kernels.hpp"

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ivnsoft {

/// A fix applied while loading a cell leniently.
struct RepairNote {
  std::string parameter;
  std::string object;
  char component = 'T';  // 'T', 'I' or 'F'
  std::string message;

  friend bool operator==(const RepairNote&, const RepairNote&) = default;
};

/// Interval-valued neutrosophic soft set over a finite universe.
///
/// Cells are total: every (parameter, object) pair holds exactly one
/// IvnNumber, stored parameter-major.
class IvnSoftSet {
 public:
  /// Throws EmptyUniverse / EmptyParameters on empty identifier lists,
  /// SchemaError on duplicates or when cells.size() != |E| * |U|.
  IvnSoftSet(std::vector<std::string> universe, std::vector<std::string> parameters, std::vector<IvnNumber> cells,
             std::vector<RepairNote> repairs = {});

  static IvnSoftSet filled(std::vector<std::string> universe, std::vector<std::string> parameters,
                           const IvnNumber& value);

  const std::vector<std::string>& universe() const noexcept { return universe_; }
  const std::vector<std::string>& parameters() const noexcept { return parameters_; }
  std::span<const IvnNumber> cells() const noexcept { return cells_; }
  const std::vector<RepairNote>& repairs() const noexcept { return repairs_; }

  const IvnNumber& at(std::size_t param, std::size_t object) const { return cells_[param * universe_.size() + object]; }
  const IvnNumber& at(std::string_view param, std::string_view object) const;
  /// Cells of one parameter row, in universe order.
  std::span<const IvnNumber> row(std::size_t param) const {
    return std::span<const IvnNumber>(cells_).subspan(param * universe_.size(), universe_.size());
  }

  std::size_t parameter_index(std::string_view name) const;
  std::size_t object_index(std::string_view name) const;

  /// Equality of universe, parameters and cells; repair notes are provenance
  /// and do not participate.
  friend bool operator==(const IvnSoftSet& a, const IvnSoftSet& b) {
    return a.universe_ == b.universe_ && a.parameters_ == b.parameters_ && a.cells_ == b.cells_;
  }

 private:
  std::vector<std::string> universe_;
  std::vector<std::string> parameters_;
  std::vector<IvnNumber> cells_;
  std::vector<RepairNote> repairs_;
};

/// Every cell is the empty value <[0,0],[1,1],[1,1]>.
IvnSoftSet make_empty(std::vector<std::string> universe, std::vector<std::string> parameters);
/// Every cell is the universal value <[1,1],[0,0],[0,0]>.
IvnSoftSet make_universal(std::vector<std::string> universe, std::vector<std::string> parameters);

/// Cell-wise `dominates`. Throws UniverseMismatch on shape mismatch.
bool is_subset(const IvnSoftSet& a, const IvnSoftSet& b);

IvnSoftSet complement(const IvnSoftSet& a, Execution exec = Execution::parallel);
IvnSoftSet soft_union(const IvnSoftSet& a, const IvnSoftSet& b, Execution exec = Execution::parallel);
IvnSoftSet soft_intersection(const IvnSoftSet& a, const IvnSoftSet& b, Execution exec = Execution::parallel);
IvnSoftSet difference(const IvnSoftSet& a, const IvnSoftSet& b, Execution exec = Execution::parallel);
IvnSoftSet add(const IvnSoftSet& a, const IvnSoftSet& b, Execution exec = Execution::parallel);
/// Throws NonPositiveScalar when c <= 0.
IvnSoftSet scale(const IvnSoftSet& a, const Scalar& c, ScaleKind kind, Execution exec = Execution::parallel);
IvnSoftSet truth_favorite(const IvnSoftSet& a, Execution exec = Execution::parallel);
IvnSoftSet false_favorite(const IvnSoftSet& a, Execution exec = Execution::parallel);

/// Soft set over parameter pairs. `set` treats each pair as an opaque
/// parameter named "(x,y)", so every soft-set operation applies unchanged.
struct PairedIvnSoftSet {
  IvnSoftSet set;
  std::vector<std::pair<std::string, std::string>> pairs;
};

/// Cell ((x,y), u) = join(a(x,u), b(y,u)); pairs are row-major over
/// a.parameters() x b.parameters(). Requires equal universes only.
PairedIvnSoftSet or_product(const IvnSoftSet& a, const IvnSoftSet& b, Execution exec = Execution::parallel);
/// Same layout with `meet`.
PairedIvnSoftSet and_product(const IvnSoftSet& a, const IvnSoftSet& b, Execution exec = Execution::parallel);

std::string pair_label(std::string_view first, std::string_view second);

struct RelationEntry {
  std::string parameter;
  std::string object;
  IvnNumber value;

  friend bool operator==(const RelationEntry&, const RelationEntry&) = default;
};

/// Flattened (parameter, object) -> value listing, parameter-major.
std::vector<RelationEntry> relation_form(const IvnSoftSet& a);
/// Inverse of relation_form. Throws SchemaError on missing, duplicate or
/// unknown pairs.
IvnSoftSet from_relation_form(std::vector<std::string> universe, std::vector<std::string> parameters,
                              std::span<const RelationEntry> entries);

/// Stable 64-bit FNV-1a digest of identifiers and exact cell values, as hex.
std::string digest(const IvnSoftSet& a);

}  // namespace ivnsoft
