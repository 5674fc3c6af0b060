// Benchmark harness: seeded random data, unchecked runs, median wall
// time and instrumented comparison counts per algorithm and size.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "campaign.hpp"

namespace dcsort {

struct BenchRow {
  std::string algo;
  std::size_t n = 0;
  std::size_t repeats = 0;
  double median_ms = 0.0;
  std::uint64_t comparisons = 0;
};

std::vector<BenchRow> run_bench(const std::vector<AlgoId>& algos,
                                const std::vector<std::size_t>& sizes, std::size_t repeats,
                                std::uint64_t seed);

std::string render_bench_table(const std::vector<BenchRow>& rows);

}  // namespace dcsort
