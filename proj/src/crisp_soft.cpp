#include "ivnsoft/crisp_soft.hpp"

#include "ivnsoft/errors.hpp"
#include "ivnsoft/detail/identifiers.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ivnsoft {
namespace {

void require_same_shape(const CrispSoftSet& a, const CrispSoftSet& b) {
  if (a.universe() != b.universe()) throw UniverseMismatch("crisp soft sets are defined over different universes");
  if (a.parameters() != b.parameters()) throw UniverseMismatch("crisp soft sets use different parameter sets");
}

template <class Op>
CrispSoftSet cellwise(const CrispSoftSet& a, const CrispSoftSet& b, Op op) {
  require_same_shape(a, b);
  CrispSoftSet out(a.universe(), a.parameters());
  for (std::size_t p = 0; p < a.parameters().size(); ++p)
    for (std::size_t u = 0; u < a.universe().size(); ++u) out.set(p, u, op(a.contains(p, u), b.contains(p, u)));
  return out;
}

}  // namespace

CrispSoftSet::CrispSoftSet(std::vector<std::string> universe, std::vector<std::string> parameters)
    : universe_(std::move(universe)), parameters_(std::move(parameters)) {
  detail::require_unique(universe_, "object");
  detail::require_unique(parameters_, "parameter");
  table_.assign(universe_.size() * parameters_.size(), 0);
}

CrispSoftSet CrispSoftSet::from_subsets(std::vector<std::string> universe, std::vector<std::string> parameters,
                                        const std::map<std::string, std::vector<std::string>>& subsets) {
  CrispSoftSet out(std::move(universe), std::move(parameters));
  for (const auto& [param, members] : subsets) {
    const std::size_t p = detail::index_of(out.parameters_, param, "parameter");
    for (const auto& m : members) out.set(p, detail::index_of(out.universe_, m, "object"), true);
  }
  return out;
}

std::vector<std::string> CrispSoftSet::subset(std::size_t param) const {
  std::vector<std::string> out;
  for (std::size_t u = 0; u < universe_.size(); ++u)
    if (contains(param, u)) out.push_back(universe_[u]);
  return out;
}

std::map<std::string, std::vector<std::string>> CrispSoftSet::nonempty_rows() const {
  std::map<std::string, std::vector<std::string>> out;
  for (std::size_t p = 0; p < parameters_.size(); ++p)
    if (auto row = subset(p); !row.empty()) out.emplace(parameters_[p], std::move(row));
  return out;
}

std::size_t CrispSoftSet::ones() const { return static_cast<std::size_t>(std::count(table_.begin(), table_.end(), 1)); }

int ChoiceValues::count(std::string_view object) const {
  return counts.at(detail::index_of(objects, object, "object"));
}

int ChoiceValues::max_count() const { return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end()); }

ChoiceValues choice_values(const CrispSoftSet& s) {
  ChoiceValues out;
  out.objects = s.universe();
  out.counts.assign(s.universe().size(), 0);
  for (std::size_t p = 0; p < s.parameters().size(); ++p)
    for (std::size_t u = 0; u < s.universe().size(); ++u) out.counts[u] += s.contains(p, u) ? 1 : 0;

  std::vector<std::size_t> order(out.objects.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return out.counts[a] > out.counts[b]; });
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.ranking.push_back(out.objects[order[i]]);
    if (i == 0 || out.counts[order[i]] != out.counts[order[i - 1]]) out.tiers.emplace_back();
    out.tiers.back().push_back(out.objects[order[i]]);
  }
  return out;
}

CrispSoftSet crisp_union(const CrispSoftSet& a, const CrispSoftSet& b) {
  return cellwise(a, b, [](bool x, bool y) { return x || y; });
}

CrispSoftSet crisp_intersection(const CrispSoftSet& a, const CrispSoftSet& b) {
  return cellwise(a, b, [](bool x, bool y) { return x && y; });
}

CrispSoftSet crisp_complement(const CrispSoftSet& a) {
  CrispSoftSet out(a.universe(), a.parameters());
  for (std::size_t p = 0; p < a.parameters().size(); ++p)
    for (std::size_t u = 0; u < a.universe().size(); ++u) out.set(p, u, !a.contains(p, u));
  return out;
}

bool crisp_subset(const CrispSoftSet& a, const CrispSoftSet& b) {
  require_same_shape(a, b);
  for (std::size_t p = 0; p < a.parameters().size(); ++p)
    for (std::size_t u = 0; u < a.universe().size(); ++u)
      if (a.contains(p, u) && !b.contains(p, u)) return false;
  return true;
}

std::string render_table(const CrispSoftSet& s) {
  std::size_t first = 1;
  for (const auto& p : s.parameters()) first = std::max(first, p.size());
  std::vector<std::size_t> widths;
  for (const auto& u : s.universe()) widths.push_back(std::max<std::size_t>(u.size(), 1));

  std::ostringstream os;
  auto pad = [&os](const std::string& text, std::size_t width) {
    os << text << std::string(width - text.size(), ' ');
  };
  pad("U", first);
  for (std::size_t u = 0; u < widths.size(); ++u) {
    os << "  " << s.universe()[u];
    if (u + 1 < widths.size()) os << std::string(widths[u] - s.universe()[u].size(), ' ');
  }
  os << '\n';
  for (std::size_t p = 0; p < s.parameters().size(); ++p) {
    pad(s.parameters()[p], first);
    for (std::size_t u = 0; u < widths.size(); ++u) {
      os << "  ";
      if (u + 1 < widths.size())
        pad(s.contains(p, u) ? "1" : "0", widths[u]);
      else
        os << (s.contains(p, u) ? "1" : "0");
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace ivnsoft
