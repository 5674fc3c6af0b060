#include <random>
#include <vector>

#include "doctest.h"
#include "dcsort/dcsort.hpp"
#include "oracle.hpp"

using dcsort::CheckMode;
using I64 = std::int64_t;
using Vec = std::vector<I64>;

namespace {

// predicate oracle for the partition postcondition; m is not unique, so
// tests check the predicate rather than a specific index
bool partition_post_holds(const Vec& before, const Vec& after, std::size_t l, std::size_t r,
                          std::size_t m) {
  if (!(l <= m && m < r)) return false;
  for (std::size_t i = l; i < m; ++i)
    if (!(after[i] <= after[m])) return false;
  for (std::size_t i = m + 1; i < r; ++i)
    if (!(after[m] <= after[i])) return false;
  const Vec window_before(before.begin() + l, before.begin() + r);
  const Vec window_after(after.begin() + l, after.begin() + r);
  if (!oracle::multiset_equal(window_before, window_after)) return false;
  for (std::size_t i = 0; i < before.size(); ++i)
    if (i < l || i >= r)
      if (before[i] != after[i]) return false;
  return true;
}

}  // namespace

TEST_SUITE("quicksort") {

TEST_CASE("quicksort: frozen examples") {
  Vec empty{};
  CHECK(dcsort::quicksort(empty, CheckMode::Full).ok());
  CHECK(empty == Vec{});

  Vec a{3, 1, 2};
  CHECK(dcsort::quicksort(a, CheckMode::Full).ok());
  CHECK(a == oracle::insertion_sorted(Vec{3, 1, 2}));

  Vec dup{1, 1, 1, 0};
  CHECK(dcsort::quicksort(dup, CheckMode::Full).ok());
  CHECK(dup == oracle::insertion_sorted(Vec{1, 1, 1, 0}));
}

TEST_CASE("partition: predicate oracle on the frozen examples") {
  Vec a{2, 1};
  Vec before = a;
  std::size_t m = dcsort::partition(a, 0, 2);
  CHECK(partition_post_holds(before, a, 0, 2, m));

  Vec b{1, 2, 3};
  before = b;
  m = dcsort::partition(b, 0, 3);
  CHECK(partition_post_holds(before, b, 0, 3, m));

  Vec c{7, 7};
  before = c;
  m = dcsort::partition(c, 0, 2);
  CHECK(partition_post_holds(before, c, 0, 2, m));
}

TEST_CASE("partition: predicate oracle on random windows") {
  std::mt19937_64 rng(61);
  bool all_ok = true;
  for (int it = 0; it < 2'000 && all_ok; ++it) {
    Vec a = oracle::random_array(rng, 30, -9, 9);
    if (a.size() < 2) continue;
    std::uniform_int_distribution<std::size_t> ldist(0, a.size() - 2);
    const std::size_t l = ldist(rng);
    std::uniform_int_distribution<std::size_t> rdist(l + 2, a.size());
    const std::size_t r = rdist(rng);
    const Vec before = a;
    const std::size_t m = dcsort::partition(a, l, r);
    all_ok = partition_post_holds(before, a, l, r, m);
  }
  CHECK(all_ok);
}

TEST_CASE("partition: usage validation") {
  Vec a{1, 2};
  CHECK_THROWS_AS(dcsort::partition(a, 0, 1), std::invalid_argument);   // r - l < 2
  CHECK_THROWS_AS(dcsort::partition(a, 0, 3), std::invalid_argument);   // r > n
  CHECK_THROWS_AS(dcsort::partition(a, 1, 1), std::invalid_argument);   // l >= r
}

TEST_CASE("quicksort: equivalence with the oracle on random arrays") {
  std::mt19937_64 rng(62);
  bool all_ok = true;
  for (int it = 0; it < 1'000 && all_ok; ++it) {
    const Vec data = oracle::random_array(rng, 400, -50, 50);
    Vec work = data;
    all_ok = dcsort::quicksort(work, CheckMode::Unchecked).ok() &&
             work == oracle::insertion_sorted(data);
  }
  CHECK(all_ok);
}

TEST_CASE("quicksort: exhaustive equivalence, length <= 8 over {0,1,2}") {
  bool all_ok = true;
  oracle::for_each_array(8, {0, 1, 2}, [&](const Vec& data) {
    if (!all_ok) return;
    Vec work = data;
    all_ok = dcsort::quicksort(work, CheckMode::Unchecked).ok() &&
             work == oracle::insertion_sorted(data);
  });
  CHECK(all_ok);
}

TEST_CASE("quicksort: full mode accepts random arrays") {
  std::mt19937_64 rng(63);
  bool all_ok = true;
  for (int it = 0; it < 200 && all_ok; ++it) {
    Vec data = oracle::random_array(rng, 40, -6, 6);
    all_ok = dcsort::quicksort(data, CheckMode::Full).ok() && oracle::sorted(data);
  }
  CHECK(all_ok);
}

TEST_CASE("quicksort: the partition-no-exchange defect is detected in Full mode") {
  Vec a{3, 1, 2};
  const auto result =
      dcsort::quicksort(a, CheckMode::Full, nullptr, dcsort::Mutation::PartitionNoExchange);
  REQUIRE_FALSE(result.ok());
  CHECK(result.violation().proviso == dcsort::Proviso::PartitionPredicate);
}

}  // TEST_SUITE
