// JSON renderings of traces, verification reports, and benchmark rows.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bench.hpp"
#include "contracts.hpp"
#include "trace.hpp"

namespace dcsort {

/// {"algo": ..., "n": ..., "events": [{"seq", "phase", "l", "m", "r",
/// "depth", "s"}, ...]} with m and s null where absent. Field order is
/// fixed; the string is newline-terminated.
std::string trace_to_json(const std::string& algo, std::size_t n,
                          const std::vector<TraceEvent>& events);

/// {"cases_run", "seed", "violations": [...], "elapsed_ms"}.
std::string report_to_json(const VerificationReport& report);

std::string bench_to_json(const std::vector<BenchRow>& rows);

/// Short human-readable rendering for the error stream.
std::string describe_violation(const Violation<std::int64_t>& v);

}  // namespace dcsort
