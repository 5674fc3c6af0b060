#include <random>
#include <vector>

#include "doctest.h"
#include "dcsort/campaign.hpp"
#include "dcsort/dcsort.hpp"
#include "oracle.hpp"

using dcsort::CheckMode;
using dcsort::Proviso;
using dcsort::Snapshot;
using I64 = std::int64_t;
using Vec = std::vector<I64>;

TEST_SUITE("contracts") {

TEST_CASE("check_triple: identity body under old == new succeeds") {
  Vec state{1, 2, 3};
  const auto result = dcsort::check_triple<I64>(
      state, [](const Vec&) { return true; }, [](Vec&) {},
      [](const Snapshot<I64>& old_state, const Vec& now) { return old_state.elems() == now; },
      CheckMode::Contracts);
  CHECK(result.ok());
}

TEST_CASE("check_triple: failing precondition skips the body") {
  Vec state{1, 2, 3};
  bool body_ran = false;
  const auto result = dcsort::check_triple<I64>(
      state, [](const Vec&) { return false; }, [&](Vec&) { body_ran = true; },
      [](const Snapshot<I64>&, const Vec&) { return true; }, CheckMode::Contracts);
  CHECK_FALSE(result.ok());
  CHECK(result.violation().proviso == Proviso::Pre);
  CHECK_FALSE(body_ran);
}

TEST_CASE("check_triple: body that negates the first element fails old == new") {
  Vec state{1, 2, 3};
  const auto result = dcsort::check_triple<I64>(
      state, [](const Vec&) { return true; }, [](Vec& v) { v[0] = -v[0]; },
      [](const Snapshot<I64>& old_state, const Vec& now) { return old_state.elems() == now; },
      CheckMode::Contracts);
  CHECK_FALSE(result.ok());
  CHECK(result.violation().proviso == Proviso::Post);
  CHECK(result.violation().before.elems() == Vec{1, 2, 3});
  CHECK(result.violation().after == Vec{-1, 2, 3});
}

TEST_CASE("check_triple: unchecked mode skips predicates but runs the body") {
  Vec state{1};
  bool body_ran = false;
  const auto result = dcsort::check_triple<I64>(
      state, [](const Vec&) { return false; }, [&](Vec&) { body_ran = true; },
      [](const Snapshot<I64>&, const Vec&) { return false; }, CheckMode::Unchecked);
  CHECK(result.ok());
  CHECK(body_ran);
}

TEST_CASE("check_triple: value-returning body") {
  Vec state{4, 7};
  const auto result = dcsort::check_triple<I64>(
      state, [](const Vec&) { return true; }, [](Vec& v) { return v.size(); },
      [](const Snapshot<I64>&, const Vec&) { return true; }, CheckMode::Contracts);
  REQUIRE(result.ok());
  CHECK(result.value() == 2);
}

TEST_CASE("check_variant") {
  CHECK(dcsort::check_variant(4, 2).ok());
  CHECK_FALSE(dcsort::check_variant(4, 4).ok());
  CHECK(dcsort::check_variant(4, 4).violation().proviso == Proviso::VariantDecrease);
  CHECK_FALSE(dcsort::check_variant(1, -1).ok());
}

TEST_CASE("make_violation rejects mismatched before/after lengths") {
  CHECK_THROWS_AS(dcsort::make_violation<I64>(Proviso::Pre, {}, "x", Snapshot<I64>(Vec{1}),
                                              Vec{1, 2}),
                  std::logic_error);
}

TEST_CASE("checking is observation-only: outputs identical across modes") {
  std::mt19937_64 rng(2024);
  bool all_ok = true;
  for (int it = 0; it < 60 && all_ok; ++it) {
    const Vec data = oracle::random_array(rng, 48, -8, 8);
    for (const dcsort::AlgoId algo : dcsort::all_algos()) {
      Vec unchecked = data, contracts = data, full = data;
      switch (algo) {
        case dcsort::AlgoId::Rec:
          REQUIRE(dcsort::merge_sort_rec(unchecked, CheckMode::Unchecked).ok());
          REQUIRE(dcsort::merge_sort_rec(contracts, CheckMode::Contracts).ok());
          REQUIRE(dcsort::merge_sort_rec(full, CheckMode::Full).ok());
          break;
        case dcsort::AlgoId::Iter:
          REQUIRE(dcsort::merge_sort_iter(unchecked, CheckMode::Unchecked).ok());
          REQUIRE(dcsort::merge_sort_iter(contracts, CheckMode::Contracts).ok());
          REQUIRE(dcsort::merge_sort_iter(full, CheckMode::Full).ok());
          break;
        case dcsort::AlgoId::Quick:
          REQUIRE(dcsort::quicksort(unchecked, CheckMode::Unchecked).ok());
          REQUIRE(dcsort::quicksort(contracts, CheckMode::Contracts).ok());
          REQUIRE(dcsort::quicksort(full, CheckMode::Full).ok());
          break;
      }
      all_ok = unchecked == contracts && contracts == full;
    }
  }
  CHECK(all_ok);
}

TEST_CASE("violations replay deterministically from their before state") {
  dcsort::CampaignConfig config;
  config.cases = 200;
  config.seed = 7;
  config.max_len = 24;
  config.mutation = dcsort::Mutation::CombineSkip;
  const auto report = dcsort::run_campaign(config);
  REQUIRE_FALSE(report.passed());
  // replaying the recorded before state through the same defective
  // algorithm reproduces a violation
  const auto& v = report.violations.front();
  const auto replroad =
      dcsort::run_algo_checked(dcsort::AlgoId::Rec, v.before.elems(), CheckMode::Full,
                               dcsort::Mutation::CombineSkip);
  CHECK(replroad.has_value());
}

}  // TEST_SUITE
