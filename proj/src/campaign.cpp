#include "dcsort/campaign.hpp"

#include <chrono>
#include <random>

#include "dcsort/msort_iter.hpp"
#include "dcsort/msort_rec.hpp"
#include "dcsort/quicksort.hpp"

namespace dcsort {

namespace {

// splitmix64 step; decorrelates per-case seeds so case i is reproducible
// from (seed, i) alone, independent of evaluation order.
std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<std::int64_t> generate_case(std::uint64_t seed, std::uint64_t index,
                                        std::size_t max_len) {
  std::mt19937_64 rng(mix(seed, index));
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  // a narrow value domain forces duplicates
  std::uniform_int_distribution<std::int64_t> value_dist(-10, 10);
  std::vector<std::int64_t> data(len_dist(rng));
  for (auto& v : data) v = value_dist(rng);
  return data;
}

}  // namespace

const char* algo_name(AlgoId id) {
  switch (id) {
    case AlgoId::Rec: return "rec";
    case AlgoId::Iter: return "iter";
    case AlgoId::Quick: return "quick";
  }
  return "unknown";
}

std::optional<AlgoId> algo_from_name(const std::string& name) {
  if (name == "rec") return AlgoId::Rec;
  if (name == "iter") return AlgoId::Iter;
  if (name == "quick") return AlgoId::Quick;
  return std::nullopt;
}

std::optional<Violation<std::int64_t>> run_algo_checked(AlgoId algo,
                                                        const std::vector<std::int64_t>& data,
                                                        CheckMode mode, Mutation mutation) {
  std::vector<std::int64_t> work = data;
  RunResult<std::int64_t> result = [&] {
    switch (algo) {
      case AlgoId::Rec:
        return merge_sort_rec(work, mode, nullptr, MergeBackend::Recursive, mutation);
      case AlgoId::Iter: return merge_sort_iter(work, mode, nullptr, mutation);
      case AlgoId::Quick: return quicksort(work, mode, nullptr, mutation);
    }
    return RunResult<std::int64_t>{};
  }();
  if (result.ok()) return std::nullopt;
  return result.violation();
}

std::vector<std::int64_t> shrink_failing_input(AlgoId algo, std::vector<std::int64_t> failing,
                                               CheckMode mode, Mutation mutation) {
  auto still_fails = [&](const std::vector<std::int64_t>& candidate) {
    return run_algo_checked(algo, candidate, mode, mutation).has_value();
  };

  // structural pass: remove chunks of halving size
  for (std::size_t chunk = failing.size() / 2; chunk >= 1;) {
    bool removed = false;
    for (std::size_t at = 0; at + chunk <= failing.size();) {
      std::vector<std::int64_t> candidate = failing;
      candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(at),
                      candidate.begin() + static_cast<std::ptrdiff_t>(at + chunk));
      if (still_fails(candidate)) {
        failing = std::move(candidate);
        removed = true;
      } else {
        at += chunk;
      }
    }
    if (!removed) chunk /= 2;
  }

  // value pass: pull entries toward zero
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < failing.size(); ++i) {
      for (std::int64_t candidate_value : {std::int64_t{0}, failing[i] / 2}) {
        if (failing[i] == candidate_value) continue;
        std::vector<std::int64_t> candidate = failing;
        candidate[i] = candidate_value;
        if (still_fails(candidate)) {
          failing = std::move(candidate);
          changed = true;
          break;
        }
      }
    }
  }
  return failing;
}

VerificationReport run_campaign(const CampaignConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.seed = config.seed;

  for (std::uint64_t i = 0; i < config.cases; ++i) {
    const std::vector<std::int64_t> data = generate_case(config.seed, i, config.max_len);
    for (AlgoId algo : config.algos) {
      ++report.cases_run;
      auto violation = run_algo_checked(algo, data, config.mode, config.mutation);
      if (!violation) continue;
      const std::size_t original_len = data.size();
      if (config.shrink) {
        const std::vector<std::int64_t> shrunk =
            shrink_failing_input(algo, data, config.mode, config.mutation);
        if (auto v = run_algo_checked(algo, shrunk, config.mode, config.mutation)) violation = v;
        violation->detail += " [case " + std::to_string(i) + ", input shrunk " +
                             std::to_string(original_len) + " -> " +
                             std::to_string(shrunk.size()) + "]";
      } else {
        violation->detail += " [case " + std::to_string(i) + "]";
      }
      report.violations.push_back(std::move(*violation));
    }
  }

  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace dcsort
