// Recursive merge of two sorted slices into a fresh array, as a
// two-array-schema instance: the principal slice is split at its middle
// element, which then partitions the secondary slice through the binary
// partition-point search fp.
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "contracts.hpp"
#include "core.hpp"
#include "mutation.hpp"
#include "schema.hpp"

namespace dcsort {

namespace detail {

template <Element T>
std::size_t fp_descend(const T& x, std::span<const T> b, std::size_t l, std::size_t r,
                       std::size_t& depth) {
  if (l == r) return l;
  const std::size_t p = l + (r - l) / 2;
  if (x == b[p]) return p;
  ++depth;
  if (x < b[p]) return fp_descend(x, b, l, p, depth);
  return fp_descend(x, b, p + 1, r, depth);
}

template <Element T>
std::size_t fp_checked(const T& x, std::span<const T> b, std::size_t l, std::size_t r,
                       CheckMode mode) {
  if (l > r || r > b.size()) {
    if (checks_contracts(mode)) {
      std::vector<T> copy(b.begin(), b.end());
      throw ViolationError<T>(make_violation<T>(
          Proviso::Pre, CallSite{"fp", l, r > b.size() ? b.size() : r, b.size(), 0},
          "fp requires 0 <= l <= r <= |b|", Snapshot<T>(b), copy));
    }
    throw std::invalid_argument("fp: invalid bounds");
  }
  if (checks_contracts(mode) && !is_sorted(slice(b, l, r))) {
    std::vector<T> copy(b.begin(), b.end());
    throw ViolationError<T>(make_violation<T>(Proviso::Pre, CallSite{"fp", l, r, b.size(), 0},
                                              "fp requires b[l..r) sorted", Snapshot<T>(b),
                                              copy));
  }
  std::size_t depth = 0;
  return fp_descend(x, b, l, r, depth);
}

}  // namespace detail

/// Partition point of probe x in the sorted window b[l, r): an index m
/// with b[i] <= x for l <= i < m and x <= b[i] for m <= i < r. When
/// duplicates of x exist any such m may be returned.
template <Element T>
RunResult<T, std::size_t> fp(const T& x, const std::vector<T>& b, std::size_t l, std::size_t r,
                             CheckMode mode = CheckMode::Unchecked) {
  try {
    return RunResult<T, std::size_t>(
        detail::fp_checked(x, std::span<const T>(b), l, r, mode));
  } catch (ViolationError<T>& e) {
    return RunResult<T, std::size_t>(std::move(e).take());
  }
}

struct FpProbe {
  std::size_t m = 0;
  std::size_t depth = 0;  // number of recursive descents
};

/// fp plus its recursion depth, for the depth-bound tests. No checking.
template <Element T>
FpProbe fp_probe(const T& x, const std::vector<T>& b, std::size_t l, std::size_t r) {
  FpProbe probe;
  probe.m = detail::fp_descend(x, std::span<const T>(b), l, r, probe.depth);
  return probe;
}

/// Two-array-schema instance for the recursive merge. Base cases copy
/// whichever slice remains; divide picks the principal middle as pivot
/// and cuts the secondary window at fp(pivot); combine is
/// left ++ [pivot] ++ right.
template <Element T>
TwoArraySchemaParts<T> make_merge_parts(CheckMode mode, Mutation mutation = Mutation::None) {
  TwoArraySchemaParts<T> parts;
  parts.name = "merge_two";
  parts.is_base = [](const SliceBounds& wa) { return wa.empty(); };
  parts.is_base2 = [](const SliceBounds& wb) { return wb.empty(); };
  parts.solve_base = [](const std::vector<T>&, const std::vector<T>& b, const SliceBounds&,
                        const SliceBounds& wb) {
    return std::vector<T>(b.begin() + static_cast<std::ptrdiff_t>(wb.l()),
                          b.begin() + static_cast<std::ptrdiff_t>(wb.r()));
  };
  parts.solve_base2 = [](const std::vector<T>& a, const std::vector<T>&, const SliceBounds& wa,
                         const SliceBounds&) {
    return std::vector<T>(a.begin() + static_cast<std::ptrdiff_t>(wa.l()),
                          a.begin() + static_cast<std::ptrdiff_t>(wa.r()));
  };
  parts.divide = [mode, mutation](const std::vector<T>& a, const std::vector<T>& b,
                                  const SliceBounds& wa, const SliceBounds& wb) {
    const std::size_t m = wa.l() + (wa.r() - wa.l()) / 2;
    const std::size_t cut = mutation == Mutation::FpReturnsLeft
                                ? wb.l()
                                : detail::fp_checked(a[m], std::span<const T>(b), wb.l(),
                                                     wb.r(), mode);
    return TwoArrayPartition{m, wb.l(), cut, cut, wb.r()};
  };
  parts.combine = [](const std::vector<T>& a, const std::vector<T>&, const SliceBounds&,
                     const SliceBounds&, const TwoArrayPartition& part, std::vector<T> left,
                     std::vector<T> right) {
    std::vector<T> out;
    out.reserve(left.size() + 1 + right.size());
    out.insert(out.end(), left.begin(), left.end());
    out.push_back(a[part.m]);
    out.insert(out.end(), right.begin(), right.end());
    return out;
  };
  parts.q = [](const std::vector<T>& a, const std::vector<T>& b, const SliceBounds& wa,
               const SliceBounds& wb) {
    return is_sorted(slice(a, wa.l(), wa.r())) && is_sorted(slice(b, wb.l(), wb.r()));
  };
  parts.r_post = [](const Snapshot<T>& a0, const Snapshot<T>& b0, const std::vector<T>& result,
                    const SliceBounds& wa, const SliceBounds& wb) {
    return result.size() == wa.length() + wb.length() && is_sorted(result) &&
           is_perm(concat(a0.view(wa.l(), wa.r()), b0.view(wb.l(), wb.r())), result);
  };
  parts.p = [](const std::vector<T>& a, const std::vector<T>& b, const SliceBounds& wa,
               const SliceBounds& wb, const TwoArrayPartition& part) {
    if (!(wa.l() <= part.m && part.m < wa.r())) return false;
    if (!(part.l1 == wb.l() && part.r1 == part.l2 && part.r2 == wb.r())) return false;
    const std::array<T, 1> pivot{a[part.m]};
    return uniformly_leq(slice(b, part.l1, part.r1), pivot) &&
           uniformly_leq(pivot, slice(b, part.l2, part.r2));
  };
  parts.pre_combine = [](const std::vector<T>& a, const std::vector<T>&, const SliceBounds& wa,
                         const SliceBounds&, const TwoArrayPartition& part,
                         const std::vector<T>& left, const std::vector<T>& right) {
    const std::array<T, 1> pivot{a[part.m]};
    return left.size() == (part.m - wa.l()) + (part.r1 - part.l1) &&
           right.size() == (wa.r() - (part.m + 1)) + (part.r2 - part.l2) &&
           uniformly_leq(left, pivot) && uniformly_leq(pivot, right);
  };
  return parts;
}

namespace detail {

template <Element T>
std::vector<T> merge_two_impl(const std::vector<T>& a, std::size_t l, std::size_t r,
                              const std::vector<T>& b, std::size_t l2, std::size_t r2,
                              CheckMode mode, TraceSink* sink, Mutation mutation) {
  const auto parts = make_merge_parts<T>(mode, mutation);
  return run_two_array_nodes(parts, a, b, l, r, l2, r2, mode, sink);
}

}  // namespace detail

/// Merge the sorted slices a[l, r) and b[l2, r2) into a fresh sorted
/// sequence. Inputs are never modified.
template <Element T>
RunResult<T, std::vector<T>> merge_two(const std::vector<T>& a, std::size_t l, std::size_t r,
                                       const std::vector<T>& b, std::size_t l2, std::size_t r2,
                                       CheckMode mode = CheckMode::Unchecked,
                                       TraceSink* sink = nullptr,
                                       Mutation mutation = Mutation::None) {
  try {
    return RunResult<T, std::vector<T>>(
        detail::merge_two_impl(a, l, r, b, l2, r2, mode, sink, mutation));
  } catch (ViolationError<T>& e) {
    return RunResult<T, std::vector<T>>(std::move(e).take());
  }
}

}  // namespace dcsort
