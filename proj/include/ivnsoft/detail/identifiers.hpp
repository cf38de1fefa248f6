#pragma once

#include "ivnsoft/errors.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace ivnsoft::detail {

inline void require_unique(const std::vector<std::string>& ids, const char* what) {
  std::unordered_set<std::string_view> seen;
  for (const auto& id : ids)
    if (!seen.insert(id).second) throw SchemaError(std::string("duplicate ") + what + " identifier \"" + id + "\"");
}

inline std::size_t index_of(const std::vector<std::string>& ids, std::string_view name, const char* what) {
  auto it = std::find(ids.begin(), ids.end(), name);
  if (it == ids.end()) throw SchemaError(std::string("unknown ") + what + " \"" + std::string(name) + "\"");
  return static_cast<std::size_t>(it - ids.begin());
}

}  // namespace ivnsoft::detail
