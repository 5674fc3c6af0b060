#include "dcsort/json_out.hpp"

#include <sstream>

#include "json.hpp"

namespace dcsort {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json event_json(const TraceEvent& e) {
  ordered_json j;
  j["seq"] = e.seq;
  j["phase"] = phase_name(e.phase);
  j["l"] = e.l;
  if (e.m)
    j["m"] = *e.m;
  else
    j["m"] = nullptr;
  j["r"] = e.r;
  j["depth"] = e.depth;
  if (e.s)
    j["s"] = *e.s;
  else
    j["s"] = nullptr;
  return j;
}

ordered_json violation_json(const Violation<std::int64_t>& v) {
  ordered_json j;
  j["proviso"] = proviso_name(v.proviso);
  j["algo"] = v.location.algo;
  j["l"] = v.location.l;
  j["r"] = v.location.r;
  j["n"] = v.location.n;
  j["depth"] = v.location.depth;
  j["detail"] = v.detail;
  j["before"] = v.before.elems();
  j["after"] = v.after;
  return j;
}

}  // namespace

std::string trace_to_json(const std::string& algo, std::size_t n,
                          const std::vector<TraceEvent>& events) {
  ordered_json j;
  j["algo"] = algo;
  j["n"] = n;
  j["events"] = ordered_json::array();
  for (const auto& e : events) j["events"].push_back(event_json(e));
  return j.dump(2) + "\n";
}

std::string report_to_json(const VerificationReport& report) {
  ordered_json j;
  j["cases_run"] = report.cases_run;
  j["seed"] = report.seed;
  j["violations"] = ordered_json::array();
  for (const auto& v : report.violations) j["violations"].push_back(violation_json(v));
  j["elapsed_ms"] = report.elapsed.count();
  return j.dump(2) + "\n";
}

std::string bench_to_json(const std::vector<BenchRow>& rows) {
  ordered_json j;
  j["results"] = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json r;
    r["algo"] = row.algo;
    r["n"] = row.n;
    r["repeats"] = row.repeats;
    r["median_ms"] = row.median_ms;
    r["comparisons"] = row.comparisons;
    j["results"].push_back(r);
  }
  return j.dump(2) + "\n";
}

std::string describe_violation(const Violation<std::int64_t>& v) {
  std::ostringstream out;
  out << "contract violation: " << proviso_name(v.proviso) << " in " << v.location.algo
      << " at [" << v.location.l << ".." << v.location.r << ") of " << v.location.n
      << ", depth " << v.location.depth << ": " << v.detail;
  auto render = [&out](const std::vector<std::int64_t>& xs, const char* label) {
    out << "\n  " << label << ":";
    const std::size_t limit = xs.size() > 16 ? 16 : xs.size();
    for (std::size_t i = 0; i < limit; ++i) out << ' ' << xs[i];
    if (xs.size() > limit) out << " ... (" << xs.size() << " elements)";
  };
  render(v.before.elems(), "before");
  render(v.after, "after");
  return out.str();
}

}  // namespace dcsort
