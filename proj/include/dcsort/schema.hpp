// Generic binary divide-and-conquer drivers. Three shapes:
//
//   run_simple    splits [l, r) at an intermediate point m and recurses on
//                 [l, m) and [m, r); both children must be non-empty.
//   run_pivot     excludes the element at m and recurses on [l, m) and
//                 [m+1, r); children may be empty.
//   run_two_array recurses on a principal window with a pivot while a
//                 divide-supplied partition of a secondary window rides
//                 along; produces a fresh result sequence.
//
// Each driver is parameterized by a parts bundle (base test B, base
// solver E, divide D, combine C, and the predicates Q, R, P). Checked
// modes verify Q at entry and R plus non-interference S at exit of every
// node; Full mode additionally asserts, at every node, the provisos that
// make the schema sound: the non-base slice is long enough, divide
// establishes P with the intermediate point inside the slice, P puts Q on
// both child slices, the variant (slice length) decreases into each
// child, P is preserved across each child call, and the children touch
// nothing outside the parent window.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contracts.hpp"
#include "core.hpp"
#include "trace.hpp"

namespace dcsort {

/// Callback and predicate bundle for run_simple.
template <Element T>
struct SimpleSchemaParts {
  std::string name = "simple";
  std::function<bool(std::size_t l, std::size_t r)> is_base;
  std::function<void(std::vector<T>&, std::size_t l, std::size_t r)> solve_base;
  std::function<std::size_t(std::vector<T>&, std::size_t l, std::size_t r)> divide;
  std::function<void(std::vector<T>&, std::size_t l, std::size_t m, std::size_t r)> combine;
  std::function<bool(const std::vector<T>&, std::size_t l, std::size_t r)> q;
  std::function<bool(const Snapshot<T>&, const std::vector<T>&, std::size_t l, std::size_t r)> r_post;
  std::function<bool(const std::vector<T>&, std::size_t l, std::size_t m, std::size_t r)> p;
  // Optional instance fact re-asserted in Full mode after each child call,
  // given the state captured right before that child ran. after_left is
  // true following the left child.
  std::function<bool(const Snapshot<T>& before_child, const std::vector<T>& now,
                     std::size_t l, std::size_t m, std::size_t r, bool after_left)>
      across_child;
};

/// Same field layout as SimpleSchemaParts, driven by run_pivot: the
/// element at m is excluded from both child slices.
template <Element T>
struct PivotSchemaParts {
  std::string name = "pivot";
  std::function<bool(std::size_t l, std::size_t r)> is_base;
  std::function<void(std::vector<T>&, std::size_t l, std::size_t r)> solve_base;
  std::function<std::size_t(std::vector<T>&, std::size_t l, std::size_t r)> divide;
  std::function<void(std::vector<T>&, std::size_t l, std::size_t m, std::size_t r)> combine;
  std::function<bool(const std::vector<T>&, std::size_t l, std::size_t r)> q;
  std::function<bool(const Snapshot<T>&, const std::vector<T>&, std::size_t l, std::size_t r)> r_post;
  std::function<bool(const std::vector<T>&, std::size_t l, std::size_t m, std::size_t r)> p;
  std::function<bool(const Snapshot<T>& before_child, const std::vector<T>& now,
                     std::size_t l, std::size_t m, std::size_t r, bool after_left)>
      across_child;
};

/// Divide outcome for the two-array schema: pivot index m in the
/// principal window plus the left [l1, r1) and right [l2, r2) windows of
/// the secondary array.
struct TwoArrayPartition {
  std::size_t m = 0;
  std::size_t l1 = 0, r1 = 0;
  std::size_t l2 = 0, r2 = 0;
};

/// Callback and predicate bundle for run_two_array. The two input arrays
/// are never mutated; every phase produces or consumes fresh sequences.
template <Element T>
struct TwoArraySchemaParts {
  std::string name = "two_array";
  std::function<bool(const SliceBounds& wa)> is_base;    // B on the principal window
  std::function<bool(const SliceBounds& wb)> is_base2;   // B' on the secondary window
  std::function<std::vector<T>(const std::vector<T>& a, const std::vector<T>& b,
                               const SliceBounds& wa, const SliceBounds& wb)>
      solve_base;
  std::function<std::vector<T>(const std::vector<T>& a, const std::vector<T>& b,
                               const SliceBounds& wa, const SliceBounds& wb)>
      solve_base2;
  std::function<TwoArrayPartition(const std::vector<T>& a, const std::vector<T>& b,
                                  const SliceBounds& wa, const SliceBounds& wb)>
      divide;
  std::function<std::vector<T>(const std::vector<T>& a, const std::vector<T>& b,
                               const SliceBounds& wa, const SliceBounds& wb,
                               const TwoArrayPartition& part, std::vector<T> left,
                               std::vector<T> right)>
      combine;
  std::function<bool(const std::vector<T>& a, const std::vector<T>& b,
                     const SliceBounds& wa, const SliceBounds& wb)>
      q;
  std::function<bool(const Snapshot<T>& a0, const Snapshot<T>& b0, const std::vector<T>& result,
                     const SliceBounds& wa, const SliceBounds& wb)>
      r_post;
  std::function<bool(const std::vector<T>& a, const std::vector<T>& b, const SliceBounds& wa,
                     const SliceBounds& wb, const TwoArrayPartition& part)>
      p;
  // Optional Full-mode fact about the child results, evaluated right
  // before combine runs.
  std::function<bool(const std::vector<T>& a, const std::vector<T>& b, const SliceBounds& wa,
                     const SliceBounds& wb, const TwoArrayPartition& part,
                     const std::vector<T>& left, const std::vector<T>& right)>
      pre_combine;
};

namespace detail {

template <Element T, typename Parts>
class OneArrayDriver {
public:
  OneArrayDriver(const Parts& parts, std::vector<T>& a, CheckMode mode, TraceSink* sink,
                 bool pivot_children)
      : parts_(parts), a_(a), mode_(mode), sink_(sink), pivot_children_(pivot_children) {}

  void node(std::size_t l, std::size_t r, std::size_t depth) {
    const std::size_t n = a_.size();
    if (l > r || r > n) {
      if (checks_contracts(mode_))
        fail(Proviso::Pre, "slice window must satisfy l <= r <= n", l, r, depth, nullptr);
      throw std::invalid_argument(parts_.name + ": invalid slice window");
    }
    if (checks_contracts(mode_) && !parts_.q(std::as_const(a_), l, r))
      fail(Proviso::Pre, "Q does not hold at call entry", l, r, depth, nullptr);
    std::optional<Snapshot<T>> entry;
    if (checks_contracts(mode_)) entry.emplace(a_);

    if (parts_.is_base(l, r)) {
      parts_.solve_base(a_, l, r);
      emit(TracePhase::Base, l, std::nullopt, r, depth);
    } else {
      const std::size_t min_len = pivot_children_ ? 1 : 2;
      if (checks_full(mode_) && r - l < min_len)
        fail(Proviso::BaseImpliesShort,
             pivot_children_ ? "non-base slice requires r - l > 0"
                             : "non-base slice requires r - l > 1",
             l, r, depth, entry ? &*entry : nullptr);

      const std::size_t m = parts_.divide(a_, l, r);
      emit(TracePhase::Divide, l, m, r, depth);

      // The intermediate point must land inside the slice for the
      // recursion to be well founded; without it the children would not
      // shrink, so the shape is enforced in every checked mode and is a
      // usage error otherwise.
      const bool m_ok = pivot_children_ ? (l <= m && m < r) : (l < m && m < r);
      if (!m_ok) {
        if (checks_contracts(mode_))
          fail(Proviso::PartitionPredicate,
               pivot_children_ ? "divide must place m with l <= m < r"
                               : "divide must place m with l < m < r",
               l, r, depth, entry ? &*entry : nullptr);
        throw std::invalid_argument(parts_.name + ": divide returned m outside the slice");
      }
      const std::size_t left_l = l, left_r = m;
      const std::size_t right_l = pivot_children_ ? m + 1 : m, right_r = r;

      if (checks_full(mode_)) {
        if (!parts_.p(std::as_const(a_), l, m, r))
          fail(Proviso::PartitionPredicate, "divide must establish P", l, r, depth, &*entry);
        if (!parts_.q(std::as_const(a_), left_l, left_r))
          fail(Proviso::Pre, "P must establish Q on the left child slice", left_l, left_r,
               depth + 1, &*entry);
        if (!parts_.q(std::as_const(a_), right_l, right_r))
          fail(Proviso::Pre, "P must establish Q on the right child slice", right_l, right_r,
               depth + 1, &*entry);
        if (!(left_r - left_l < r - l) || !(right_r - right_l < r - l))
          fail(Proviso::VariantDecrease, "child slice length must be smaller than the parent's",
               l, r, depth, &*entry);
      }

      const std::size_t l0 = l, m0 = m, r0 = r;

      std::optional<Snapshot<T>> before_child;
      if (checks_full(mode_)) before_child.emplace(a_);
      node(left_l, left_r, depth + 1);
      if (checks_full(mode_)) {
        if (l != l0 || m != m0 || r != r0)
          fail(Proviso::PartitionPredicate, "l, m, r must be immutable across the left child",
               l, r, depth, &*before_child);
        if (!parts_.p(std::as_const(a_), l, m, r))
          fail(Proviso::PartitionPredicate, "P not preserved by the left child call", l, r,
               depth, &*before_child);
        if (parts_.across_child && !parts_.across_child(*before_child, a_, l, m, r, true))
          fail(Proviso::Post, "instance fact failed after the left child call", l, r, depth,
               &*before_child);
        before_child.emplace(a_);
      }
      node(right_l, right_r, depth + 1);
      if (checks_full(mode_)) {
        if (l != l0 || m != m0 || r != r0)
          fail(Proviso::PartitionPredicate, "l, m, r must be immutable across the right child",
               l, r, depth, &*before_child);
        if (!parts_.p(std::as_const(a_), l, m, r))
          fail(Proviso::PartitionPredicate, "P not preserved by the right child call", l, r,
               depth, &*before_child);
        if (parts_.across_child && !parts_.across_child(*before_child, a_, l, m, r, false))
          fail(Proviso::Post, "instance fact failed after the right child call", l, r, depth,
               &*before_child);
        if (!outside_unchanged(*entry, a_, SliceBounds(l, r, n)))
          fail(Proviso::NonInterference, "child calls changed state outside the parent slice",
               l, r, depth, &*entry);
      }

      parts_.combine(a_, l, m, r);
      emit(TracePhase::Combine, l, m, r, depth);
    }

    if (checks_contracts(mode_)) {
      if (!parts_.r_post(*entry, std::as_const(a_), l, r))
        fail(Proviso::Post, "R does not hold at call exit", l, r, depth, &*entry);
      if (!outside_unchanged(*entry, a_, SliceBounds(l, r, n)))
        fail(Proviso::NonInterference, "state outside the slice changed", l, r, depth, &*entry);
    }
  }

private:
  void emit(TracePhase phase, std::size_t l, std::optional<std::size_t> m, std::size_t r,
            std::size_t depth) {
    if (!sink_) return;
    sink_->on_event(TraceEvent{seq_++, parts_.name, phase, l, m, r, depth, std::nullopt});
  }

  [[noreturn]] void fail(Proviso proviso, std::string detail, std::size_t l, std::size_t r,
                         std::size_t depth, const Snapshot<T>* before) {
    Snapshot<T> snap = before ? *before : Snapshot<T>(a_);
    throw ViolationError<T>(make_violation<T>(proviso,
                                              CallSite{parts_.name, l, r, a_.size(), depth},
                                              std::move(detail), std::move(snap), a_));
  }

  const Parts& parts_;
  std::vector<T>& a_;
  CheckMode mode_;
  TraceSink* sink_;
  bool pivot_children_;
  std::uint64_t seq_ = 0;
};

template <Element T>
void run_simple_nodes(const SimpleSchemaParts<T>& parts, std::vector<T>& a, std::size_t l,
                      std::size_t r, CheckMode mode, TraceSink* sink) {
  OneArrayDriver<T, SimpleSchemaParts<T>>(parts, a, mode, sink, false).node(l, r, 0);
}

template <Element T>
void run_pivot_nodes(const PivotSchemaParts<T>& parts, std::vector<T>& a, std::size_t l,
                     std::size_t r, CheckMode mode, TraceSink* sink) {
  OneArrayDriver<T, PivotSchemaParts<T>>(parts, a, mode, sink, true).node(l, r, 0);
}

template <Element T>
class TwoArrayDriver {
public:
  TwoArrayDriver(const TwoArraySchemaParts<T>& parts, const std::vector<T>& a,
                 const std::vector<T>& b, CheckMode mode, TraceSink* sink)
      : parts_(parts), a_(a), b_(b), mode_(mode), sink_(sink) {}

  std::vector<T> node(std::size_t l, std::size_t r, std::size_t l2, std::size_t r2,
                      std::size_t depth) {
    if (l > r || r > a_.size() || l2 > r2 || r2 > b_.size()) {
      if (checks_contracts(mode_))
        fail(Proviso::Pre, "both windows must satisfy l <= r <= length", l, r, depth);
      throw std::invalid_argument(parts_.name + ": invalid window");
    }
    const SliceBounds wa(l, r, a_.size());
    const SliceBounds wb(l2, r2, b_.size());
    if (checks_contracts(mode_) && !parts_.q(a_, b_, wa, wb))
      fail(Proviso::Pre, "Q does not hold at call entry", l, r, depth);
    std::optional<Snapshot<T>> a0, b0;
    if (checks_contracts(mode_)) {
      a0.emplace(a_);
      b0.emplace(b_);
    }

    std::vector<T> result;
    if (parts_.is_base(wa)) {
      result = parts_.solve_base(a_, b_, wa, wb);
      emit(TracePhase::Base, l, std::nullopt, r, depth);
    } else if (parts_.is_base2(wb)) {
      result = parts_.solve_base2(a_, b_, wa, wb);
      emit(TracePhase::Base, l, std::nullopt, r, depth);
    } else {
      if (checks_full(mode_) && r - l < 1)
        fail(Proviso::BaseImpliesShort, "non-base principal slice requires r - l > 0", l, r,
             depth);
      const TwoArrayPartition part = parts_.divide(a_, b_, wa, wb);
      emit(TracePhase::Divide, l, part.m, r, depth);

      const bool shape_ok = l <= part.m && part.m < r && part.l1 <= part.r1 &&
                            part.r1 <= b_.size() && part.l2 <= part.r2 && part.r2 <= b_.size();
      if (!shape_ok) {
        if (checks_contracts(mode_))
          fail(Proviso::PartitionPredicate,
               "divide must place m with l <= m < r and produce valid secondary windows", l, r,
               depth);
        throw std::invalid_argument(parts_.name + ": divide produced an invalid partition");
      }
      if (checks_full(mode_)) {
        if (!parts_.p(a_, b_, wa, wb, part))
          fail(Proviso::PartitionPredicate, "divide must establish P", l, r, depth);
        if (!parts_.q(a_, b_, SliceBounds(l, part.m, a_.size()),
                      SliceBounds(part.l1, part.r1, b_.size())))
          fail(Proviso::Pre, "P must establish Q on the left child", l, part.m, depth + 1);
        if (!parts_.q(a_, b_, SliceBounds(part.m + 1, r, a_.size()),
                      SliceBounds(part.l2, part.r2, b_.size())))
          fail(Proviso::Pre, "P must establish Q on the right child", part.m + 1, r, depth + 1);
        if (!(part.m - l < r - l) || !(r - (part.m + 1) < r - l))
          fail(Proviso::VariantDecrease,
               "principal child slice length must be smaller than the parent's", l, r, depth);
      }

      std::vector<T> left = node(l, part.m, part.l1, part.r1, depth + 1);
      if (checks_full(mode_) && !parts_.p(a_, b_, wa, wb, part))
        fail(Proviso::PartitionPredicate, "P not preserved by the left child call", l, r, depth);
      std::vector<T> right = node(part.m + 1, r, part.l2, part.r2, depth + 1);
      if (checks_full(mode_) && !parts_.p(a_, b_, wa, wb, part))
        fail(Proviso::PartitionPredicate, "P not preserved by the right child call", l, r, depth);
      if (checks_full(mode_) && parts_.pre_combine &&
          !parts_.pre_combine(a_, b_, wa, wb, part, left, right))
        fail(Proviso::Post, "combine-phase facts about the child results failed", l, r, depth);

      result = parts_.combine(a_, b_, wa, wb, part, std::move(left), std::move(right));
      emit(TracePhase::Combine, l, part.m, r, depth);
    }

    if (checks_contracts(mode_)) {
      if (!parts_.r_post(*a0, *b0, result, wa, wb))
        fail(Proviso::Post, "R does not hold at call exit", l, r, depth);
      // Extended non-interference: neither input array may change at all.
      if (a_ != a0->elems() || b_ != b0->elems())
        fail(Proviso::NonInterference, "an input array changed", l, r, depth);
    }
    return result;
  }

private:
  void emit(TracePhase phase, std::size_t l, std::optional<std::size_t> m, std::size_t r,
            std::size_t depth) {
    if (!sink_) return;
    sink_->on_event(TraceEvent{seq_++, parts_.name, phase, l, m, r, depth, std::nullopt});
  }

  [[noreturn]] void fail(Proviso proviso, std::string detail, std::size_t l, std::size_t r,
                         std::size_t depth) {
    throw ViolationError<T>(make_violation<T>(proviso,
                                              CallSite{parts_.name, l, r, a_.size(), depth},
                                              std::move(detail), Snapshot<T>(a_), a_));
  }

  const TwoArraySchemaParts<T>& parts_;
  const std::vector<T>& a_;
  const std::vector<T>& b_;
  CheckMode mode_;
  TraceSink* sink_;
  std::uint64_t seq_ = 0;
};

template <Element T>
std::vector<T> run_two_array_nodes(const TwoArraySchemaParts<T>& parts, const std::vector<T>& a,
                                   const std::vector<T>& b, std::size_t l, std::size_t r,
                                   std::size_t l2, std::size_t r2, CheckMode mode,
                                   TraceSink* sink) {
  return TwoArrayDriver<T>(parts, a, b, mode, sink).node(l, r, l2, r2, 0);
}

}  // namespace detail

/// Drive a simple-schema instance over a[b.l, b.r). The array is mutated
/// in place; the first failed check is returned as a Violation.
template <Element T>
RunResult<T> run_simple(const SimpleSchemaParts<T>& parts, std::vector<T>& a,
                        const SliceBounds& b, CheckMode mode, TraceSink* sink = nullptr) {
  if (b.n() != a.size())
    throw std::invalid_argument("run_simple: bounds built for a different array length");
  try {
    detail::run_simple_nodes(parts, a, b.l(), b.r(), mode, sink);
  } catch (ViolationError<T>& e) {
    return RunResult<T>(std::move(e).take());
  }
  return {};
}

/// Drive a pivot-schema instance over a[b.l, b.r).
template <Element T>
RunResult<T> run_pivot(const PivotSchemaParts<T>& parts, std::vector<T>& a, const SliceBounds& b,
                       CheckMode mode, TraceSink* sink = nullptr) {
  if (b.n() != a.size())
    throw std::invalid_argument("run_pivot: bounds built for a different array length");
  try {
    detail::run_pivot_nodes(parts, a, b.l(), b.r(), mode, sink);
  } catch (ViolationError<T>& e) {
    return RunResult<T>(std::move(e).take());
  }
  return {};
}

/// Drive a two-array-schema instance over a[wa) and b[wb), producing a
/// fresh result sequence. Neither input is modified.
template <Element T>
RunResult<T, std::vector<T>> run_two_array(const TwoArraySchemaParts<T>& parts,
                                           const std::vector<T>& a, const std::vector<T>& b,
                                           const SliceBounds& wa, const SliceBounds& wb,
                                           CheckMode mode, TraceSink* sink = nullptr) {
  if (wa.n() != a.size() || wb.n() != b.size())
    throw std::invalid_argument("run_two_array: bounds built for different array lengths");
  try {
    return RunResult<T, std::vector<T>>(
        detail::run_two_array_nodes(parts, a, b, wa.l(), wa.r(), wb.l(), wb.r(), mode, sink));
  } catch (ViolationError<T>& e) {
    return RunResult<T, std::vector<T>>(std::move(e).take());
  }
}

}  // namespace dcsort
