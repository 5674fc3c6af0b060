#include "dcsort/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dcsort/counting.hpp"
#include "dcsort/msort_iter.hpp"
#include "dcsort/msort_rec.hpp"
#include "dcsort/quicksort.hpp"

namespace dcsort {

namespace {

std::vector<CountedInt> bench_data(std::uint64_t seed, AlgoId algo, std::size_t n) {
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(algo) + 1)) ^
                      (n * 0xBF58476D1CE4E5B9ULL));
  std::uniform_int_distribution<std::int64_t> dist(-1'000'000, 1'000'000);
  std::vector<CountedInt> data(n);
  for (auto& v : data) v.value = dist(rng);
  return data;
}

void run_unchecked(AlgoId algo, std::vector<CountedInt>& work) {
  switch (algo) {
    case AlgoId::Rec: merge_sort_rec(work, CheckMode::Unchecked); return;
    case AlgoId::Iter: merge_sort_iter(work, CheckMode::Unchecked); return;
    case AlgoId::Quick: quicksort(work, CheckMode::Unchecked); return;
  }
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<AlgoId>& algos,
                                const std::vector<std::size_t>& sizes, std::size_t repeats,
                                std::uint64_t seed) {
  if (sizes.empty()) throw std::invalid_argument("bench: sizes must be non-empty");
  if (repeats < 1) throw std::invalid_argument("bench: repeats must be >= 1");

  std::vector<BenchRow> rows;
  for (AlgoId algo : algos) {
    for (std::size_t n : sizes) {
      const std::vector<CountedInt> data = bench_data(seed, algo, n);
      std::vector<double> times_ms;
      std::uint64_t comparisons = 0;
      for (std::size_t rep = 0; rep < repeats; ++rep) {
        std::vector<CountedInt> work = data;
        reset_comparison_count();
        const auto t0 = std::chrono::steady_clock::now();
        run_unchecked(algo, work);
        const auto t1 = std::chrono::steady_clock::now();
        comparisons = comparison_count();  // deterministic per (algo, n, seed)
        times_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        if (!is_sorted(work)) throw std::runtime_error("bench: run produced unsorted output");
      }
      std::sort(times_ms.begin(), times_ms.end());
      const double median = times_ms.size() % 2 == 1
                                ? times_ms[times_ms.size() / 2]
                                : 0.5 * (times_ms[times_ms.size() / 2 - 1] +
                                         times_ms[times_ms.size() / 2]);
      rows.push_back(BenchRow{algo_name(algo), n, repeats, median, comparisons});
    }
  }
  return rows;
}

std::string render_bench_table(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "algo   n          repeats  median_ms     comparisons\n";
  for (const auto& row : rows) {
    out << row.algo;
    for (std::size_t i = row.algo.size(); i < 7; ++i) out << ' ';
    std::string n_str = std::to_string(row.n);
    out << n_str;
    for (std::size_t i = n_str.size(); i < 11; ++i) out << ' ';
    std::string rep_str = std::to_string(row.repeats);
    out << rep_str;
    for (std::size_t i = rep_str.size(); i < 9; ++i) out << ' ';
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%-14.3f", row.median_ms);
    out << buf << row.comparisons << "\n";
  }
  return out.str();
}

}  // namespace dcsort
