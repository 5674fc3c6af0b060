// Recursive merge sort as a simple-schema instance: base is any slice
// shorter than two, divide is the midpoint, combine merges the two
// sorted halves in place through a fresh merged sequence.
#pragma once

#include <optional>
#include <vector>

#include "contracts.hpp"
#include "core.hpp"
#include "merge_rec.hpp"
#include "msort_iter.hpp"
#include "mutation.hpp"
#include "schema.hpp"

namespace dcsort {

/// Which merge routine backs the in-place connector.
enum class MergeBackend { Recursive, Iterative };

namespace detail {

template <Element T>
void merge_in_place_impl(std::vector<T>& a, std::size_t l, std::size_t m, std::size_t r,
                         CheckMode mode, MergeBackend backend, Mutation mutation) {
  const std::size_t n = a.size();
  const CallSite site{"merge_in_place", l, r <= n ? r : n, n, 0};
  if (l > m || m > r || r > n) {
    if (checks_contracts(mode))
      fail_iter<T>(Proviso::Pre, "merge_in_place requires l <= m <= r <= n", site,
                   Snapshot<T>(a), a);
    throw std::invalid_argument("merge_in_place: invalid bounds");
  }
  if (checks_contracts(mode)) {
    if (!(l < m && m < r))
      fail_iter<T>(Proviso::Pre, "merge_in_place requires 0 <= l < m < r <= n", site,
                   Snapshot<T>(a), a);
    if (!is_sorted(slice(a, l, m)) || !is_sorted(slice(a, m, r)))
      fail_iter<T>(Proviso::Pre, "merge_in_place requires both halves sorted", site,
                   Snapshot<T>(a), a);
  }
  std::optional<Snapshot<T>> entry;
  if (checks_contracts(mode)) entry.emplace(a);

  std::vector<T> merged;
  if (backend == MergeBackend::Recursive) {
    merged = merge_two_impl(a, l, m, a, m, r, mode, nullptr, mutation);
  } else {
    std::vector<T> left(a.begin() + static_cast<std::ptrdiff_t>(l),
                        a.begin() + static_cast<std::ptrdiff_t>(m));
    std::vector<T> right(a.begin() + static_cast<std::ptrdiff_t>(m),
                         a.begin() + static_cast<std::ptrdiff_t>(r));
    merged.resize(r - l);
    merge_iter_impl(left, right, merged, mode, mutation);
  }
  if (!merged.empty()) copy(merged, 0, a, l, merged.size());

  if (checks_contracts(mode)) {
    if (!is_sorted(slice(a, l, r)) || !is_perm(slice(a, l, r), entry->view(l, r)))
      fail_iter<T>(Proviso::Post, "merged window must be a sorted permutation of itself", site,
                   *entry, a);
    if (!outside_unchanged(*entry, a, SliceBounds(l, r, n)))
      fail_iter<T>(Proviso::NonInterference, "merge_in_place changed state outside [l, r)",
                   site, *entry, a);
  }
}

}  // namespace detail

/// Simple-schema instance for recursive merge sort.
template <Element T>
SimpleSchemaParts<T> make_merge_sort_parts(CheckMode mode,
                                           MergeBackend backend = MergeBackend::Recursive,
                                           Mutation mutation = Mutation::None) {
  SimpleSchemaParts<T> parts;
  parts.name = "msort_rec";
  parts.is_base = [](std::size_t l, std::size_t r) { return r - l < 2; };
  parts.solve_base = [](std::vector<T>&, std::size_t, std::size_t) {};
  parts.divide = [](std::vector<T>&, std::size_t l, std::size_t r) { return l + (r - l) / 2; };
  parts.combine = [mode, backend, mutation](std::vector<T>& a, std::size_t l, std::size_t m,
                                            std::size_t r) {
    if (mutation == Mutation::CombineSkip) return;
    detail::merge_in_place_impl(a, l, m, r, mode, backend, mutation);
  };
  parts.q = [](const std::vector<T>& a, std::size_t l, std::size_t r) {
    return l <= r && r <= a.size();
  };
  parts.r_post = [](const Snapshot<T>& before, const std::vector<T>& now, std::size_t l,
                    std::size_t r) {
    return is_sorted(slice(now, l, r)) && is_perm(slice(now, l, r), before.view(l, r));
  };
  parts.p = [](const std::vector<T>& a, std::size_t l, std::size_t m, std::size_t r) {
    return l < m && m < r && r <= a.size();
  };
  // the slice stays a permutation of itself across each child call
  parts.across_child = [](const Snapshot<T>& before, const std::vector<T>& now, std::size_t l,
                          std::size_t, std::size_t r, bool) {
    return is_perm(slice(now, l, r), before.view(l, r));
  };
  return parts;
}

/// Merge the two sorted halves a[l, m) and a[m, r) in place.
template <Element T>
RunResult<T> merge_in_place(std::vector<T>& a, std::size_t l, std::size_t m, std::size_t r,
                            CheckMode mode = CheckMode::Unchecked,
                            MergeBackend backend = MergeBackend::Recursive,
                            Mutation mutation = Mutation::None) {
  try {
    detail::merge_in_place_impl(a, l, m, r, mode, backend, mutation);
  } catch (ViolationError<T>& e) {
    return RunResult<T>(std::move(e).take());
  }
  return {};
}

/// Sort a[l, r) in place, leaving the rest of the array untouched.
template <Element T>
RunResult<T> merge_sort_slice(std::vector<T>& a, std::size_t l, std::size_t r,
                              CheckMode mode = CheckMode::Unchecked, TraceSink* sink = nullptr,
                              MergeBackend backend = MergeBackend::Recursive,
                              Mutation mutation = Mutation::None) {
  if (l > r || r > a.size()) {
    if (checks_contracts(mode))
      return RunResult<T>(make_violation<T>(
          Proviso::Pre, CallSite{"msort_rec", l, r <= a.size() ? r : a.size(), a.size(), 0},
          "slice bounds must satisfy 0 <= l <= r <= n", Snapshot<T>(a), a));
    throw std::invalid_argument("merge_sort_slice: invalid bounds");
  }
  const auto parts = make_merge_sort_parts<T>(mode, backend, mutation);
  return run_simple(parts, a, SliceBounds(l, r, a.size()), mode, sink);
}

/// Sort the whole array in place.
template <Element T>
RunResult<T> merge_sort_rec(std::vector<T>& a, CheckMode mode = CheckMode::Unchecked,
                            TraceSink* sink = nullptr,
                            MergeBackend backend = MergeBackend::Recursive,
                            Mutation mutation = Mutation::None) {
  return merge_sort_slice(a, 0, a.size(), mode, sink, backend, mutation);
}

}  // namespace dcsort
