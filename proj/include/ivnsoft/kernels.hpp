#pragma once

#include "ivnsoft/ivn_number.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ivnsoft {

/// How cell-wise kernels run. `serial` is the reference path; `parallel`
/// uses OpenMP when the library is built with it and falls back to the
/// serial loop otherwise. Both produce identical results.
enum class Execution { serial, parallel };

namespace kernels {

/// Below this many work items the parallel path runs serially.
inline constexpr std::size_t kParallelGrain = 2048;

bool openmp_enabled() noexcept;

/// Calls f(i) for i in [0, n). `f` must not throw and must only write state
/// owned by index i.
// `cost` is the number of cells one index touches; the loop goes parallel
// once n * cost reaches the grain.
template <class F>
void for_each_index(std::size_t n, Execution exec, F&& f, std::size_t cost = 1) {
  if (exec == Execution::serial || n < 2 || n * cost < kParallelGrain) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) f(static_cast<std::size_t>(i));
}

template <class F>
std::vector<IvnNumber> map_cells(std::span<const IvnNumber> in, Execution exec, F&& f) {
  std::vector<IvnNumber> out(in.size());
  for_each_index(in.size(), exec, [&](std::size_t i) { out[i] = f(in[i]); });
  return out;
}

template <class F>
std::vector<IvnNumber> zip_cells(std::span<const IvnNumber> a, std::span<const IvnNumber> b, Execution exec, F&& f) {
  std::vector<IvnNumber> out(a.size());
  for_each_index(a.size(), exec, [&](std::size_t i) { out[i] = f(a[i], b[i]); });
  return out;
}

}  // namespace kernels
}  // namespace ivnsoft
