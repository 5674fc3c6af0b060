// Quicksort as a pivot-schema instance. The partition predicate P asks
// the left slice to be uniformly <= the pivot and the pivot <= the right
// slice; combine is a no-op.
#pragma once

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "contracts.hpp"
#include "core.hpp"
#include "mutation.hpp"
#include "schema.hpp"

namespace dcsort {

/// First-element pivot exchange partition over a[l, r), r - l >= 2.
/// Returns the pivot's final index m with a[l..m) <= a[m] <= a[m+1..r);
/// the window is permuted in place and nothing outside it moves.
template <Element T>
std::size_t partition(std::vector<T>& a, std::size_t l, std::size_t r) {
  if (l >= r || r > a.size() || r - l < 2)
    throw std::invalid_argument("partition: require 0 <= l < r <= n and r - l >= 2");
  std::size_t store = l;
  for (std::size_t k = l + 1; k < r; ++k) {
    if (a[k] < a[l]) {
      ++store;
      std::swap(a[store], a[k]);
    }
  }
  std::swap(a[l], a[store]);
  return store;
}

/// Pivot-schema instance for quicksort.
template <Element T>
PivotSchemaParts<T> make_quicksort_parts(Mutation mutation = Mutation::None) {
  PivotSchemaParts<T> parts;
  parts.name = "quicksort";
  parts.is_base = [](std::size_t l, std::size_t r) { return r - l < 2; };
  parts.solve_base = [](std::vector<T>&, std::size_t, std::size_t) {};
  parts.divide = [mutation](std::vector<T>& a, std::size_t l, std::size_t r) {
    if (mutation == Mutation::PartitionNoExchange) return l;
    return partition(a, l, r);
  };
  parts.combine = [](std::vector<T>&, std::size_t, std::size_t, std::size_t) {};
  parts.q = [](const std::vector<T>& a, std::size_t l, std::size_t r) {
    return l <= r && r <= a.size();
  };
  parts.r_post = [](const Snapshot<T>& before, const std::vector<T>& now, std::size_t l,
                    std::size_t r) {
    return is_sorted(slice(now, l, r)) && is_perm(slice(now, l, r), before.view(l, r));
  };
  parts.p = [](const std::vector<T>& a, std::size_t l, std::size_t m, std::size_t r) {
    if (!(l <= m && m < r && r <= a.size())) return false;
    const std::array<T, 1> pivot{a[m]};
    return uniformly_leq(slice(a, l, m), pivot) && uniformly_leq(pivot, slice(a, m + 1, r));
  };
  return parts;
}

/// Sort the whole array in place.
template <Element T>
RunResult<T> quicksort(std::vector<T>& a, CheckMode mode = CheckMode::Unchecked,
                       TraceSink* sink = nullptr, Mutation mutation = Mutation::None) {
  const auto parts = make_quicksort_parts<T>(mutation);
  return run_pivot(parts, a, SliceBounds::whole(a.size()), mode, sink);
}

}  // namespace dcsort
