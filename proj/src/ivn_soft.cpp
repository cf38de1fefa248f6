#include "ivnsoft/ivn_soft.hpp"

#include "ivnsoft/detail/identifiers.hpp"
#include "ivnsoft/errors.hpp"

#include <cstdint>
#include <cstdio>

namespace ivnsoft {
namespace {

void require_same_shape(const IvnSoftSet& a, const IvnSoftSet& b) {
  if (a.universe() != b.universe()) throw UniverseMismatch("ivn-soft sets are defined over different universes");
  if (a.parameters() != b.parameters()) throw UniverseMismatch("ivn-soft sets use different parameter sets");
}

template <class F>
IvnSoftSet lift(const IvnSoftSet& a, Execution exec, F&& f) {
  return IvnSoftSet(a.universe(), a.parameters(), kernels::map_cells(a.cells(), exec, std::forward<F>(f)));
}

template <class F>
IvnSoftSet lift(const IvnSoftSet& a, const IvnSoftSet& b, Execution exec, F&& f) {
  require_same_shape(a, b);
  return IvnSoftSet(a.universe(), a.parameters(), kernels::zip_cells(a.cells(), b.cells(), exec, std::forward<F>(f)));
}

template <class F>
PairedIvnSoftSet product(const IvnSoftSet& a, const IvnSoftSet& b, Execution exec, F&& f) {
  if (a.universe() != b.universe()) throw UniverseMismatch("products need ivn-soft sets over the same universe");
  const std::size_t na = a.parameters().size();
  const std::size_t nb = b.parameters().size();
  const std::size_t nu = a.universe().size();

  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::string> labels;
  labels.reserve(na * nb);
  for (const auto& x : a.parameters())
    for (const auto& y : b.parameters()) {
      pairs.emplace_back(x, y);
      labels.push_back(pair_label(x, y));
    }

  std::vector<IvnNumber> cells(na * nb * nu);
  kernels::for_each_index(cells.size(), exec, [&](std::size_t i) {
    const std::size_t u = i % nu;
    const std::size_t pair = i / nu;
    cells[i] = f(a.at(pair / nb, u), b.at(pair % nb, u));
  });
  return {IvnSoftSet(a.universe(), std::move(labels), std::move(cells)), std::move(pairs)};
}

class Fnv1a {
 public:
  void feed(std::string_view s) {
    for (unsigned char c : s) {
      hash_ ^= c;
      hash_ *= 0x100000001b3ULL;
    }
    hash_ ^= 0xff;  // field separator
    hash_ *= 0x100000001b3ULL;
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
    return buf;
  }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace

IvnSoftSet::IvnSoftSet(std::vector<std::string> universe, std::vector<std::string> parameters,
                       std::vector<IvnNumber> cells, std::vector<RepairNote> repairs)
    : universe_(std::move(universe)),
      parameters_(std::move(parameters)),
      cells_(std::move(cells)),
      repairs_(std::move(repairs)) {
  if (universe_.empty()) throw EmptyUniverse();
  if (parameters_.empty()) throw EmptyParameters();
  detail::require_unique(universe_, "object");
  detail::require_unique(parameters_, "parameter");
  if (cells_.size() != universe_.size() * parameters_.size())
    throw SchemaError("cell table is not total: expected " + std::to_string(universe_.size() * parameters_.size()) +
                      " cells, got " + std::to_string(cells_.size()));
}

IvnSoftSet IvnSoftSet::filled(std::vector<std::string> universe, std::vector<std::string> parameters,
                              const IvnNumber& value) {
  const std::size_t n = universe.size() * parameters.size();
  return IvnSoftSet(std::move(universe), std::move(parameters), std::vector<IvnNumber>(n, value));
}

const IvnNumber& IvnSoftSet::at(std::string_view param, std::string_view object) const {
  return at(parameter_index(param), object_index(object));
}

std::size_t IvnSoftSet::parameter_index(std::string_view name) const {
  return detail::index_of(parameters_, name, "parameter");
}

std::size_t IvnSoftSet::object_index(std::string_view name) const {
  return detail::index_of(universe_, name, "object");
}

IvnSoftSet make_empty(std::vector<std::string> universe, std::vector<std::string> parameters) {
  return IvnSoftSet::filled(std::move(universe), std::move(parameters), empty_value());
}

IvnSoftSet make_universal(std::vector<std::string> universe, std::vector<std::string> parameters) {
  return IvnSoftSet::filled(std::move(universe), std::move(parameters), universal_value());
}

bool is_subset(const IvnSoftSet& a, const IvnSoftSet& b) {
  require_same_shape(a, b);
  const auto ca = a.cells();
  const auto cb = b.cells();
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (!dominates(ca[i], cb[i])) return false;
  return true;
}

IvnSoftSet complement(const IvnSoftSet& a, Execution exec) {
  return lift(a, exec, [](const IvnNumber& x) { return complement(x); });
}

IvnSoftSet soft_union(const IvnSoftSet& a, const IvnSoftSet& b, Execution exec) {
  return lift(a, b, exec, [](const IvnNumber& x, const IvnNumber& y) { return join(x, y); });
}

IvnSoftSet soft_intersection(const IvnSoftSet& a, const IvnSoftSet& b, Execution exec) {
  return lift(a, b, exec, [](const IvnNumber& x, const IvnNumber& y) { return meet(x, y); });
}

IvnSoftSet difference(const IvnSoftSet& a, const IvnSoftSet& b, Execution exec) {
  return lift(a, b, exec, [](const IvnNumber& x, const IvnNumber& y) { return difference(x, y); });
}

IvnSoftSet add(const IvnSoftSet& a, const IvnSoftSet& b, Execution exec) {
  return lift(a, b, exec, [](const IvnNumber& x, const IvnNumber& y) { return add(x, y); });
}

IvnSoftSet scale(const IvnSoftSet& a, const Scalar& c, ScaleKind kind, Execution exec) {
  // Checked here so the kernel never throws inside a parallel region.
  if (c <= Scalar(0)) throw NonPositiveScalar(c.to_string());
  return lift(a, exec, [&](const IvnNumber& x) { return scale(x, c, kind); });
}

IvnSoftSet truth_favorite(const IvnSoftSet& a, Execution exec) {
  return lift(a, exec, [](const IvnNumber& x) { return truth_favorite(x); });
}

IvnSoftSet false_favorite(const IvnSoftSet& a, Execution exec) {
  return lift(a, exec, [](const IvnNumber& x) { return false_favorite(x); });
}

PairedIvnSoftSet or_product(const IvnSoftSet& a, const IvnSoftSet& b, Execution exec) {
  return product(a, b, exec, [](const IvnNumber& x, const IvnNumber& y) { return join(x, y); });
}

PairedIvnSoftSet and_product(const IvnSoftSet& a, const IvnSoftSet& b, Execution exec) {
  return product(a, b, exec, [](const IvnNumber& x, const IvnNumber& y) { return meet(x, y); });
}

std::string pair_label(std::string_view first, std::string_view second) {
  std::string out = "(";
  out += first;
  out += ',';
  out += second;
  out += ')';
  return out;
}

std::vector<RelationEntry> relation_form(const IvnSoftSet& a) {
  std::vector<RelationEntry> out;
  out.reserve(a.cells().size());
  for (std::size_t p = 0; p < a.parameters().size(); ++p)
    for (std::size_t u = 0; u < a.universe().size(); ++u)
      out.push_back({a.parameters()[p], a.universe()[u], a.at(p, u)});
  return out;
}

IvnSoftSet from_relation_form(std::vector<std::string> universe, std::vector<std::string> parameters,
                              std::span<const RelationEntry> entries) {
  const std::size_t nu = universe.size();
  std::vector<IvnNumber> cells(nu * parameters.size());
  std::vector<bool> seen(cells.size(), false);
  for (const auto& e : entries) {
    const std::size_t i =
        detail::index_of(parameters, e.parameter, "parameter") * nu + detail::index_of(universe, e.object, "object");
    if (seen[i]) throw SchemaError("duplicate relation entry at " + e.parameter + "/" + e.object);
    seen[i] = true;
    cells[i] = e.value;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw SchemaError("relation form is missing cell " + parameters[i / nu] + "/" + universe[i % nu]);
  return IvnSoftSet(std::move(universe), std::move(parameters), std::move(cells));
}

std::string digest(const IvnSoftSet& a) {
  Fnv1a h;
  for (const auto& u : a.universe()) h.feed(u);
  h.feed("|");
  for (const auto& p : a.parameters()) h.feed(p);
  h.feed("|");
  for (const auto& c : a.cells()) h.feed(c.to_string());
  return h.hex();
}

}  // namespace ivnsoft
