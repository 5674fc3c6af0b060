#include <random>
#include <vector>

#include "doctest.h"
#include "dcsort/dcsort.hpp"
#include "oracle.hpp"
#include "trace_check.hpp"

using dcsort::CheckMode;
using dcsort::Proviso;
using dcsort::SliceBounds;
using dcsort::Snapshot;
using dcsort::TracePhase;
using I64 = std::int64_t;
using Vec = std::vector<I64>;

namespace {

dcsort::SimpleSchemaParts<I64> trivial_simple_parts() {
  dcsort::SimpleSchemaParts<I64> parts;
  parts.name = "trivial";
  parts.is_base = [](std::size_t, std::size_t) { return true; };
  parts.solve_base = [](Vec&, std::size_t, std::size_t) {};
  parts.divide = [](Vec&, std::size_t l, std::size_t r) { return l + (r - l) / 2; };
  parts.combine = [](Vec&, std::size_t, std::size_t, std::size_t) {};
  parts.q = [](const Vec&, std::size_t, std::size_t) { return true; };
  parts.r_post = [](const Snapshot<I64>&, const Vec&, std::size_t, std::size_t) { return true; };
  parts.p = [](const Vec&, std::size_t, std::size_t, std::size_t) { return true; };
  return parts;
}

}  // namespace

TEST_SUITE("schema") {

TEST_CASE("run_simple: degenerate all-base instance leaves any array unchanged") {
  auto parts = trivial_simple_parts();
  Vec a{5, 3, 8};
  const Vec original = a;
  dcsort::TraceCollector trace;
  const auto result = dcsort::run_simple(parts, a, SliceBounds(0, 3, 3), CheckMode::Full, &trace);
  CHECK(result.ok());
  CHECK(a == original);
  CHECK(trace.events.size() == 1);
  CHECK(trace.events[0].phase == TracePhase::Base);

  Vec b{1};
  CHECK(dcsort::run_simple(parts, b, SliceBounds(0, 1, 1), CheckMode::Contracts).ok());
  CHECK(b == Vec{1});
}

TEST_CASE("run_simple: merge sort parts sort [3,1,2]") {
  const auto parts = dcsort::make_merge_sort_parts<I64>(CheckMode::Full);
  Vec a{3, 1, 2};
  const auto result = dcsort::run_simple(parts, a, SliceBounds::whole(3), CheckMode::Full);
  CHECK(result.ok());
  CHECK(a == oracle::insertion_sorted(Vec{3, 1, 2}));
}

TEST_CASE("run_simple: combine replaced by skip yields Violation(Post)") {
  const auto parts =
      dcsort::make_merge_sort_parts<I64>(CheckMode::Full, dcsort::MergeBackend::Recursive,
                                         dcsort::Mutation::CombineSkip);
  Vec a{2, 1, 4, 3};
  const auto result = dcsort::run_simple(parts, a, SliceBounds::whole(4), CheckMode::Full);
  REQUIRE_FALSE(result.ok());
  CHECK(result.violation().proviso == Proviso::Post);

  // with both halves already sorted the first failing combine is the root
  Vec b{1, 2, 0, 3};
  const auto root_result = dcsort::run_simple(parts, b, SliceBounds::whole(4), CheckMode::Full);
  REQUIRE_FALSE(root_result.ok());
  CHECK(root_result.violation().proviso == Proviso::Post);
  CHECK(root_result.violation().location.l == 0);
  CHECK(root_result.violation().location.r == 4);
  CHECK(root_result.violation().location.depth == 0);
}

TEST_CASE("run_simple: a base predicate that lets short slices through is caught") {
  auto parts = dcsort::make_merge_sort_parts<I64>(CheckMode::Full);
  parts.is_base = [](std::size_t l, std::size_t r) { return r - l < 1; };
  Vec a{2, 1, 3};
  const auto result = dcsort::run_simple(parts, a, SliceBounds::whole(3), CheckMode::Full);
  REQUIRE_FALSE(result.ok());
  CHECK(result.violation().proviso == Proviso::BaseImpliesShort);
}

TEST_CASE("run_simple: solve_base that writes outside the slice is caught") {
  auto parts = trivial_simple_parts();
  parts.solve_base = [](Vec& a, std::size_t, std::size_t) {
    if (!a.empty()) a[0] = 99;
  };
  Vec a{1, 2, 3};
  const auto result = dcsort::run_simple(parts, a, SliceBounds(1, 3, 3), CheckMode::Contracts);
  REQUIRE_FALSE(result.ok());
  CHECK(result.violation().proviso == Proviso::NonInterference);
}

TEST_CASE("run_simple: rejects bounds built for a different array") {
  auto parts = trivial_simple_parts();
  Vec a{1, 2};
  CHECK_THROWS_AS(dcsort::run_simple(parts, a, SliceBounds(0, 3, 3), CheckMode::Unchecked),
                  std::invalid_argument);
}

TEST_CASE("run_pivot: quicksort parts sort [2,1]") {
  const auto parts = dcsort::make_quicksort_parts<I64>();
  Vec a{2, 1};
  const auto result = dcsort::run_pivot(parts, a, SliceBounds::whole(2), CheckMode::Full);
  CHECK(result.ok());
  CHECK(a == Vec{1, 2});
}

TEST_CASE("run_pivot: all-base instance leaves the array unchanged") {
  dcsort::PivotSchemaParts<I64> parts;
  parts.name = "trivial_pivot";
  parts.is_base = [](std::size_t, std::size_t) { return true; };
  parts.solve_base = [](Vec&, std::size_t, std::size_t) {};
  parts.divide = [](Vec&, std::size_t l, std::size_t) { return l; };
  parts.combine = [](Vec&, std::size_t, std::size_t, std::size_t) {};
  parts.q = [](const Vec&, std::size_t, std::size_t) { return true; };
  parts.r_post = [](const Snapshot<I64>&, const Vec&, std::size_t, std::size_t) { return true; };
  parts.p = [](const Vec&, std::size_t, std::size_t, std::size_t) { return true; };
  Vec a{9, 1, 5};
  CHECK(dcsort::run_pivot(parts, a, SliceBounds::whole(3), CheckMode::Full).ok());
  CHECK(a == Vec{9, 1, 5});
}

TEST_CASE("run_pivot: divide returning m = r violates the partition predicate") {
  auto parts = dcsort::make_quicksort_parts<I64>();
  parts.divide = [](Vec&, std::size_t, std::size_t r) { return r; };
  Vec a{3, 1, 2};
  const auto result = dcsort::run_pivot(parts, a, SliceBounds::whole(3), CheckMode::Full);
  REQUIRE_FALSE(result.ok());
  CHECK(result.violation().proviso == Proviso::PartitionPredicate);
}

TEST_CASE("run_two_array: merge parts merge [1,3] and [2,4]") {
  const auto parts = dcsort::make_merge_parts<I64>(CheckMode::Full);
  const Vec a{1, 3}, b{2, 4};
  const auto result = dcsort::run_two_array(parts, a, b, SliceBounds::whole(2),
                                            SliceBounds::whole(2), CheckMode::Full);
  REQUIRE(result.ok());
  CHECK(result.value() == Vec{1, 2, 3, 4});
  CHECK(a == Vec{1, 3});
  CHECK(b == Vec{2, 4});
}

TEST_CASE("run_two_array: empty principal slice copies the secondary") {
  const auto parts = dcsort::make_merge_parts<I64>(CheckMode::Contracts);
  const Vec a{}, b{7, 9};
  const auto result = dcsort::run_two_array(parts, a, b, SliceBounds::whole(0),
                                            SliceBounds::whole(2), CheckMode::Contracts);
  REQUIRE(result.ok());
  CHECK(result.value() == Vec{7, 9});
}

TEST_CASE("run_two_array: combine that drops the pivot and right child fails Post") {
  auto parts = dcsort::make_merge_parts<I64>(CheckMode::Full);
  parts.combine = [](const Vec&, const Vec&, const SliceBounds&, const SliceBounds&,
                     const dcsort::TwoArrayPartition&, Vec left, Vec) { return left; };
  const Vec a{1, 3}, b{2, 4};
  const auto result = dcsort::run_two_array(parts, a, b, SliceBounds::whole(2),
                                            SliceBounds::whole(2), CheckMode::Full);
  REQUIRE_FALSE(result.ok());
  CHECK(result.violation().proviso == Proviso::Post);
}

TEST_CASE("trace: recursive traces are post-ordered trees with shrinking children") {
  std::mt19937_64 rng(11);
  bool all_ok = true;
  for (int it = 0; it < 40 && all_ok; ++it) {
    Vec a = oracle::random_array(rng, 40, -5, 5);
    dcsort::TraceCollector trace;
    const bool use_pivot = it % 2 == 0;
    if (use_pivot)
      REQUIRE(dcsort::quicksort(a, CheckMode::Unchecked, &trace).ok());
    else
      REQUIRE(dcsort::merge_sort_rec(a, CheckMode::Unchecked, &trace).ok());
    all_ok = trace_check::well_formed(trace.events, use_pivot);
  }
  CHECK(all_ok);
}

TEST_CASE("trace: merge sort on n=4 has 3 divides, 4 bases, 3 combines") {
  Vec a{4, 3, 2, 1};
  dcsort::TraceCollector trace;
  REQUIRE(dcsort::merge_sort_rec(a, CheckMode::Unchecked, &trace).ok());
  CHECK(trace.events.size() == 10);
  CHECK(trace.count(TracePhase::Divide) == 3);
  CHECK(trace.count(TracePhase::Base) == 4);
  CHECK(trace.count(TracePhase::Combine) == 3);
}

}  // TEST_SUITE
