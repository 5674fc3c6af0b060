#include <random>
#include <vector>

#include "doctest.h"
#include "dcsort/dcsort.hpp"
#include "oracle.hpp"

using dcsort::CheckMode;
using dcsort::MergeBackend;
using dcsort::Proviso;
using I64 = std::int64_t;
using Vec = std::vector<I64>;

TEST_SUITE("msort_rec") {

TEST_CASE("merge_sort_rec: frozen examples") {
  Vec empty{};
  CHECK(dcsort::merge_sort_rec(empty, CheckMode::Full).ok());
  CHECK(empty == Vec{});

  Vec a{3, 1, 2};
  CHECK(dcsort::merge_sort_rec(a, CheckMode::Full).ok());
  CHECK(a == oracle::insertion_sorted(Vec{3, 1, 2}));

  Vec dup{2, 2, 1};
  CHECK(dcsort::merge_sort_rec(dup, CheckMode::Full).ok());
  CHECK(dup == oracle::insertion_sorted(Vec{2, 2, 1}));
}

TEST_CASE("merge_sort_slice: sorts only the window") {
  Vec a{9, 7, 4, 9};
  CHECK(dcsort::merge_sort_slice(a, 1, 3, CheckMode::Full).ok());
  CHECK(a == Vec{9, 4, 7, 9});

  Vec single{5};
  CHECK(dcsort::merge_sort_slice(single, 0, 1, CheckMode::Full).ok());
  CHECK(single == Vec{5});

  Vec whole{4, 3, 2, 1};
  CHECK(dcsort::merge_sort_slice(whole, 0, 4, CheckMode::Full).ok());
  CHECK(whole == Vec{1, 2, 3, 4});
}

TEST_CASE("merge_sort_slice: invalid bounds give Violation(Pre) when checked") {
  Vec a{1, 2};
  const auto result = dcsort::merge_sort_slice(a, 2, 1, CheckMode::Contracts);
  REQUIRE_FALSE(result.ok());
  CHECK(result.violation().proviso == Proviso::Pre);
  CHECK_THROWS_AS(dcsort::merge_sort_slice(a, 0, 5, CheckMode::Unchecked),
                  std::invalid_argument);
}

TEST_CASE("merge_in_place: frozen examples") {
  Vec a{2, 5, 1, 3};
  CHECK(dcsort::merge_in_place(a, 0, 2, 4, CheckMode::Full).ok());
  CHECK(a == Vec{1, 2, 3, 5});

  Vec b{1, 2};
  CHECK(dcsort::merge_in_place(b, 0, 1, 2, CheckMode::Full).ok());
  CHECK(b == Vec{1, 2});

  Vec c{0, 9, 9, 1, 0};
  CHECK(dcsort::merge_in_place(c, 1, 3, 4, CheckMode::Full).ok());
  CHECK(c == Vec{0, 1, 9, 9, 0});
}

TEST_CASE("merge_in_place: unsorted halves are a precondition violation when checked") {
  Vec a{0, 9, 1, 9, 0};  // left half [9,1] is not sorted
  const auto result = dcsort::merge_in_place(a, 1, 3, 4, CheckMode::Contracts);
  REQUIRE_FALSE(result.ok());
  CHECK(result.violation().proviso == Proviso::Pre);
}

TEST_CASE("merge_in_place: both backends satisfy the same contract") {
  std::mt19937_64 rng(41);
  bool all_ok = true;
  for (int it = 0; it < 400 && all_ok; ++it) {
    Vec base = oracle::random_array(rng, 30, -9, 9);
    if (base.size() < 2) continue;
    std::uniform_int_distribution<std::size_t> ldist(0, base.size() - 2);
    const std::size_t l = ldist(rng);
    std::uniform_int_distribution<std::size_t> rdist(l + 2, base.size());
    const std::size_t r = rdist(rng);
    std::uniform_int_distribution<std::size_t> mdist(l + 1, r - 1);
    const std::size_t m = mdist(rng);
    // sort the halves so the precondition holds
    Vec left(base.begin() + l, base.begin() + m), right(base.begin() + m, base.begin() + r);
    left = oracle::insertion_sorted(left);
    right = oracle::insertion_sorted(right);
    std::copy(left.begin(), left.end(), base.begin() + l);
    std::copy(right.begin(), right.end(), base.begin() + m);

    Vec via_rec = base, via_iter = base;
    all_ok = dcsort::merge_in_place(via_rec, l, m, r, CheckMode::Full,
                                    MergeBackend::Recursive)
                 .ok() &&
             dcsort::merge_in_place(via_iter, l, m, r, CheckMode::Full,
                                    MergeBackend::Iterative)
                 .ok() &&
             via_rec == via_iter;
  }
  CHECK(all_ok);
}

TEST_CASE("merge_sort_rec: both backends produce the oracle sort") {
  std::mt19937_64 rng(42);
  bool all_ok = true;
  for (int it = 0; it < 200 && all_ok; ++it) {
    const Vec data = oracle::random_array(rng, 60, -9, 9);
    Vec via_rec = data, via_iter = data;
    all_ok = dcsort::merge_sort_rec(via_rec, CheckMode::Unchecked, nullptr,
                                    MergeBackend::Recursive)
                 .ok() &&
             dcsort::merge_sort_rec(via_iter, CheckMode::Unchecked, nullptr,
                                    MergeBackend::Iterative)
                 .ok() &&
             via_rec == oracle::insertion_sorted(data) && via_iter == via_rec;
  }
  CHECK(all_ok);
}

TEST_CASE("merge_sort_rec: exhaustive equivalence, length <= 9 over {0,1,2}") {
  bool all_ok = true;
  oracle::for_each_array(9, {0, 1, 2}, [&](const Vec& data) {
    if (!all_ok) return;
    Vec work = data;
    all_ok = dcsort::merge_sort_rec(work, CheckMode::Unchecked).ok() &&
             work == oracle::insertion_sorted(data);
  });
  CHECK(all_ok);
}

TEST_CASE("merge_sort_rec: recursion depth is at most ceil(log2 n) + 1") {
  std::mt19937_64 rng(43);
  bool all_ok = true;
  for (std::size_t n : {1u, 2u, 3u, 5u, 7u, 16u, 33u, 100u}) {
    Vec data = oracle::random_array(rng, n, -9, 9);
    data.resize(n, 0);
    dcsort::TraceCollector trace;
    REQUIRE(dcsort::merge_sort_rec(data, CheckMode::Unchecked, &trace).ok());
    std::size_t max_depth_field = 0;
    for (const auto& e : trace.events) max_depth_field = std::max(max_depth_field, e.depth);
    // depth field is 0-based, so levels = max_depth_field + 1
    all_ok = all_ok && max_depth_field + 1 <= dcsort::ceil_log2(n) + 1;
  }
  CHECK(all_ok);
}

}  // TEST_SUITE
