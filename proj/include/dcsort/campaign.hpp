// Randomized verification campaigns over int64 arrays: generate seeded
// cases, run the selected algorithms in a checked mode, shrink failing
// inputs, and aggregate violations into a report.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contracts.hpp"
#include "mutation.hpp"

namespace dcsort {

enum class AlgoId { Rec, Iter, Quick };

const char* algo_name(AlgoId id);
std::optional<AlgoId> algo_from_name(const std::string& name);

inline std::vector<AlgoId> all_algos() { return {AlgoId::Rec, AlgoId::Iter, AlgoId::Quick}; }

struct CampaignConfig {
  std::vector<AlgoId> algos = all_algos();
  std::uint64_t cases = 100;
  std::uint64_t seed = 42;
  std::size_t max_len = 64;
  CheckMode mode = CheckMode::Full;
  Mutation mutation = Mutation::None;  // test hook
  bool shrink = true;
};

/// Run one algorithm on a copy of `data`; nullopt means no violation.
std::optional<Violation<std::int64_t>> run_algo_checked(AlgoId algo,
                                                        const std::vector<std::int64_t>& data,
                                                        CheckMode mode, Mutation mutation);

/// Greedily minimize a violating input: drop chunks, then pull values
/// toward zero, keeping every candidate that still violates.
std::vector<std::int64_t> shrink_failing_input(AlgoId algo, std::vector<std::int64_t> failing,
                                               CheckMode mode, Mutation mutation);

VerificationReport run_campaign(const CampaignConfig& config);

}  // namespace dcsort
