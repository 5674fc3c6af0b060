// Bottom-up iterative merge sort and its helpers. Each pass merges
// pairs of consecutive sorted runs of length s, doubling s until it
// covers the array, so no recursion stack is needed. Full mode evaluates
// the loop invariants before each loop, after every iteration, and at
// exit:
//
//   sort level : runs starting at multiples of s are sorted (the last run
//                may be shorter), the array is a permutation of the
//                input, and n - s strictly decreases.
//   merges pass: 0 <= j <= n; j is a multiple of 2s unless it reached n;
//                runs of width 2s are sorted before j and runs of width s
//                remain sorted from j on; n - j strictly decreases.
//   merge_iter : k = i + j; the written prefix of c is sorted, bounded by
//                everything not yet consumed, and is a multiset equal to
//                the consumed prefixes.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contracts.hpp"
#include "core.hpp"
#include "mutation.hpp"
#include "trace.hpp"

namespace dcsort {

/// Bookkeeping for one bottom-up pass: current sorted-run length s and
/// the pass cursor j. During a pass j is a multiple of 2s or j = n.
struct LevelState {
  std::size_t s = 1;
  std::size_t j = 0;
};

/// dest[j, j+len) := src[i, i+len). The two arrays must be distinct and
/// all indices in range; anything else is a usage error.
template <Element T>
void copy(const std::vector<T>& src, std::size_t i, std::vector<T>& dest, std::size_t j,
          std::size_t len) {
  if (&src == &dest) throw std::invalid_argument("copy: src and dest must be distinct arrays");
  if (i >= src.size() || j >= dest.size())
    throw std::invalid_argument("copy: start index out of range");
  if (src.size() - i < len || dest.size() - j < len)
    throw std::invalid_argument("copy: length out of range");
  std::copy_n(src.begin() + static_cast<std::ptrdiff_t>(i), len,
              dest.begin() + static_cast<std::ptrdiff_t>(j));
}

namespace detail {

template <Element T>
[[noreturn]] void fail_iter(Proviso proviso, std::string detail, CallSite site,
                            const Snapshot<T>& before, const std::vector<T>& after) {
  throw ViolationError<T>(
      make_violation<T>(proviso, std::move(site), std::move(detail), before, after));
}

template <Element T>
void merge_iter_impl(const std::vector<T>& a, const std::vector<T>& b, std::vector<T>& c,
                     CheckMode mode, Mutation mutation) {
  if (c.size() != a.size() + b.size())
    throw std::invalid_argument("merge_iter: |c| must equal |a| + |b|");
  const CallSite site{"merge_iter", 0, c.size(), c.size(), 0};
  if (checks_contracts(mode) && (!is_sorted(a) || !is_sorted(b)))
    fail_iter<T>(Proviso::Pre, "merge_iter requires both inputs sorted", site, Snapshot<T>(c),
                 c);
  std::optional<Snapshot<T>> a0, b0, c0;
  if (checks_contracts(mode)) {
    a0.emplace(a);
    b0.emplace(b);
    c0.emplace(c);
  }

  std::size_t i = 0, j = 0, k = 0;
  auto invariant = [&]() -> const char* {
    if (k != i + j) return "k == i + j";
    const auto written = slice(c, 0, k);
    if (!is_sorted(written)) return "c[0..k) sorted";
    if (!uniformly_leq(written, slice(a, i, a.size())))
      return "c[0..k) bounded by the unconsumed part of a";
    if (!uniformly_leq(written, slice(b, j, b.size())))
      return "c[0..k) bounded by the unconsumed part of b";
    if (!is_perm(written, concat(slice(a, 0, i), slice(b, 0, j))))
      return "multiset(c[0..k)) == multiset(a[0..i) + b[0..j))";
    return nullptr;
  };
  auto check_invariant = [&]() {
    if (const char* clause = invariant())
      fail_iter<T>(Proviso::LoopInvariant, std::string("merge_iter invariant failed: ") + clause,
                   site, *c0, c);
  };
  std::size_t prev_variant = 0;
  bool have_prev = false;
  auto check_variant_step = [&]() {
    const std::size_t v = (a.size() - i) + (b.size() - j);
    if (have_prev && v >= prev_variant)
      fail_iter<T>(Proviso::LoopVariant, "merge_iter loop measure failed to decrease", site,
                   *c0, c);
    prev_variant = v;
    have_prev = true;
  };

  if (checks_full(mode)) check_invariant();
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j])
      c[k++] = a[i++];
    else
      c[k++] = b[j++];
    if (checks_full(mode)) {
      check_variant_step();
      check_invariant();
    }
  }
  if (mutation != Mutation::MergeIterNoDrain) {
    while (i < a.size()) {
      c[k++] = a[i++];
      if (checks_full(mode)) {
        check_variant_step();
        check_invariant();
      }
    }
    while (j < b.size()) {
      c[k++] = b[j++];
      if (checks_full(mode)) {
        check_variant_step();
        check_invariant();
      }
    }
  }
  if (checks_full(mode)) check_invariant();

  if (checks_contracts(mode)) {
    if (!is_sorted(c) || !is_perm(c, concat(a, b)))
      fail_iter<T>(Proviso::Post, "merge_iter output must be a sorted merge of both inputs",
                   site, *c0, c);
    if (a != a0->elems() || b != b0->elems())
      fail_iter<T>(Proviso::NonInterference, "merge_iter must not change its inputs", site, *c0,
                   c);
  }
}

// Every window a[l, min(l+width, n)) with l a multiple of `width` in
// [from, to) is sorted.
template <Element T>
bool runs_sorted(const std::vector<T>& a, std::size_t width, std::size_t from, std::size_t to) {
  if (width == 0) return true;
  std::size_t start = from == 0 ? 0 : ((from + width - 1) / width) * width;
  for (std::size_t l = start; l < to; l += width)
    if (!is_sorted(slice(a, l, std::min(l + width, a.size())))) return false;
  return true;
}

template <Element T>
void merge_pair_impl(std::vector<T>& a, std::size_t l, std::size_t s, CheckMode mode,
                     Mutation mutation) {
  const std::size_t n = a.size();
  const CallSite site{"merge_pair", l, n, n, 0};
  if (checks_contracts(mode)) {
    if (l >= n)
      fail_iter<T>(Proviso::Pre, "merge_pair requires 0 <= l < n", site, Snapshot<T>(a), a);
    if (s < 1)
      fail_iter<T>(Proviso::Pre, "merge_pair requires s >= 1", site, Snapshot<T>(a), a);
    const std::size_t end1 = std::min(l + std::min(s, n - l), n);
    const std::size_t end2 = s < n - l ? std::min(l + 2 * s, n) : n;
    if (!is_sorted(slice(a, l, end1)) || !is_sorted(slice(a, end1, end2)))
      fail_iter<T>(Proviso::Pre, "merge_pair requires both runs sorted", site, Snapshot<T>(a),
                   a);
  }
  std::optional<Snapshot<T>> entry;
  if (checks_contracts(mode)) entry.emplace(a);

  if (l < n && s >= 1 && s < n - l) {
    std::vector<T> left(s);
    copy(a, l, left, 0, s);
    const std::size_t s2 = std::min(s, n - (l + s));
    std::vector<T> right(s2);
    copy(a, l + s, right, 0, s2);
    std::vector<T> merged(s + s2);
    merge_iter_impl(left, right, merged, mode, mutation);
    if (mutation != Mutation::MergePairNoCopyBack) copy(merged, 0, a, l, s + s2);
  }
  // when l + s >= n there is no second run and the call is a no-op

  if (checks_contracts(mode)) {
    const std::size_t end2 = (l < n && s < n - l) ? std::min(l + 2 * s, n) : n;
    if (!is_sorted(slice(a, std::min(l, n), end2)))
      fail_iter<T>(Proviso::Post, "merge_pair must leave a[l..min(l+2s,n)) sorted", site, *entry,
                   a);
    if (!is_perm(a, entry->elems()))
      fail_iter<T>(Proviso::Post, "merge_pair must permute the array", site, *entry, a);
    if (!outside_unchanged(*entry, a, SliceBounds(std::min(l, n), end2, n)))
      fail_iter<T>(Proviso::NonInterference, "merge_pair changed state outside [l, l+2s)", site,
                   *entry, a);
  }
}

template <Element T>
void merges_impl(std::vector<T>& a, std::size_t s, CheckMode mode, Mutation mutation) {
  const std::size_t n = a.size();
  const CallSite site{"merges", 0, n, n, 0};
  if (checks_contracts(mode)) {
    if (n < 1)
      fail_iter<T>(Proviso::Pre, "merges requires a non-empty array", site, Snapshot<T>(a), a);
    if (s < 1) fail_iter<T>(Proviso::Pre, "merges requires s >= 1", site, Snapshot<T>(a), a);
    if (!runs_sorted(a, s, 0, n))
      fail_iter<T>(Proviso::Pre, "merges requires each run of length s sorted", site,
                   Snapshot<T>(a), a);
  }
  std::optional<Snapshot<T>> entry;
  if (checks_contracts(mode)) entry.emplace(a);

  // any width >= n visits only l = 0, so clamping keeps 2*s from
  // overflowing without changing which windows are inspected
  const std::size_t width2 = s < n ? 2 * s : std::max<std::size_t>(n, 1);
  LevelState state{s, 0};
  auto invariant = [&]() -> const char* {
    if (state.j > n) return "0 <= j <= n";
    if (state.j != n && state.j % width2 != 0) return "j != n implies j is a multiple of 2s";
    if (!runs_sorted(a, width2, 0, state.j)) return "runs of length 2s sorted before j";
    if (!runs_sorted(a, s, state.j, n)) return "runs of length s sorted from j on";
    if (!is_perm(a, entry->elems())) return "permutation of the entry state";
    return nullptr;
  };
  auto check_invariant = [&]() {
    if (const char* clause = invariant())
      fail_iter<T>(Proviso::LoopInvariant, std::string("merges invariant failed: ") + clause,
                   site, *entry, a);
  };

  if (checks_full(mode)) check_invariant();
  std::size_t prev_variant = 0;
  bool have_prev = false;
  while (state.j != n) {
    if (checks_full(mode)) {
      const std::size_t v = n - state.j;
      if (have_prev && v >= prev_variant)
        fail_iter<T>(Proviso::LoopVariant, "merges loop measure n - j failed to decrease", site,
                     *entry, a);
      prev_variant = v;
      have_prev = true;
    }
    merge_pair_impl(a, state.j, s, mode, mutation);
    state.j = (s >= n || 2 * s >= n - state.j) ? n : state.j + 2 * s;
    if (checks_full(mode)) check_invariant();
  }

  if (checks_contracts(mode)) {
    if (!runs_sorted(a, width2, 0, n))
      fail_iter<T>(Proviso::Post, "merges must leave each run of length 2s sorted", site, *entry,
                   a);
    if (!is_perm(a, entry->elems()))
      fail_iter<T>(Proviso::Post, "merges must permute the array", site, *entry, a);
  }
}

template <Element T>
void merge_sort_iter_impl(std::vector<T>& a, CheckMode mode, TraceSink* sink,
                          Mutation mutation) {
  const std::size_t n = a.size();
  if (n == 0) return;  // public wrapper accepts the empty array; the core needs n >= 1
  const CallSite site{"msort_iter", 0, n, n, 0};
  std::optional<Snapshot<T>> entry;
  if (checks_contracts(mode)) entry.emplace(a);

  std::uint64_t seq = 0;
  std::size_t s = 1;
  std::size_t pass = 0;
  auto invariant = [&]() -> const char* {
    if (s < 1) return "1 <= s";
    if (!runs_sorted(a, s, 0, n)) return "runs of length s sorted";
    if (!is_perm(a, entry->elems())) return "permutation of the input";
    return nullptr;
  };
  auto check_invariant = [&]() {
    if (const char* clause = invariant())
      fail_iter<T>(Proviso::LoopInvariant,
                   std::string("merge sort level invariant failed: ") + clause, site, *entry, a);
  };

  if (checks_full(mode)) check_invariant();
  std::size_t prev_variant = 0;
  bool have_prev = false;
  while (s < n) {
    if (checks_full(mode)) {
      const std::size_t v = n - s;
      if (have_prev && v >= prev_variant)
        fail_iter<T>(Proviso::LoopVariant, "merge sort loop measure n - s failed to decrease",
                     site, *entry, a);
      prev_variant = v;
      have_prev = true;
    }
    if (sink)
      sink->on_event(TraceEvent{seq++, "msort_iter", TracePhase::LevelPass, 0, std::nullopt, n,
                                pass, s});
    merges_impl(a, s, mode, mutation);
    s = 2 * s;
    ++pass;
    if (checks_full(mode)) check_invariant();
  }
  // at exit s >= n, so the single run starting at 0 covers the array

  if (checks_contracts(mode)) {
    if (!is_sorted(a))
      fail_iter<T>(Proviso::Post, "merge sort must leave the array sorted", site, *entry, a);
    if (!is_perm(a, entry->elems()))
      fail_iter<T>(Proviso::Post, "merge sort must permute the input", site, *entry, a);
  }
}

}  // namespace detail

/// Merge a and b, both sorted, into c (|c| = |a| + |b|).
template <Element T>
RunResult<T> merge_iter(const std::vector<T>& a, const std::vector<T>& b, std::vector<T>& c,
                        CheckMode mode = CheckMode::Unchecked,
                        Mutation mutation = Mutation::None) {
  try {
    detail::merge_iter_impl(a, b, c, mode, mutation);
  } catch (ViolationError<T>& e) {
    return RunResult<T>(std::move(e).take());
  }
  return {};
}

/// Merge the two consecutive sorted runs starting at l, each of length at
/// most s; a no-op when there is no second run.
template <Element T>
RunResult<T> merge_pair(std::vector<T>& a, std::size_t l, std::size_t s,
                        CheckMode mode = CheckMode::Unchecked,
                        Mutation mutation = Mutation::None) {
  try {
    detail::merge_pair_impl(a, l, s, mode, mutation);
  } catch (ViolationError<T>& e) {
    return RunResult<T>(std::move(e).take());
  }
  return {};
}

/// One pass over the array: merge every pair of consecutive runs of
/// length s, so that runs of length 2s are sorted afterwards.
template <Element T>
RunResult<T> merges(std::vector<T>& a, std::size_t s, CheckMode mode = CheckMode::Unchecked,
                    Mutation mutation = Mutation::None) {
  try {
    detail::merges_impl(a, s, mode, mutation);
  } catch (ViolationError<T>& e) {
    return RunResult<T>(std::move(e).take());
  }
  return {};
}

/// Bottom-up merge sort. Passes are reported to the sink as LevelPass
/// events with the run length s doubling from 1.
template <Element T>
RunResult<T> merge_sort_iter(std::vector<T>& a, CheckMode mode = CheckMode::Unchecked,
                             TraceSink* sink = nullptr, Mutation mutation = Mutation::None) {
  try {
    detail::merge_sort_iter_impl(a, mode, sink, mutation);
  } catch (ViolationError<T>& e) {
    return RunResult<T>(std::move(e).take());
  }
  return {};
}

}  // namespace dcsort
