// Execution trace events: one node of the divide (upper) or combine
// (lower) tree of a recursive run, or one level pass of the bottom-up
// sort. Drivers emit into an optional sink; the CLI renders JSON.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dcsort {

enum class TracePhase { Divide, Base, Combine, LevelPass };

inline const char* phase_name(TracePhase p) {
  switch (p) {
    case TracePhase::Divide: return "Divide";
    case TracePhase::Base: return "Base";
    case TracePhase::Combine: return "Combine";
    case TracePhase::LevelPass: return "LevelPass";
  }
  return "unknown";
}

struct TraceEvent {
  std::uint64_t seq = 0;
  std::string algo;
  TracePhase phase = TracePhase::Base;
  std::size_t l = 0;
  std::optional<std::size_t> m;  // absent for Base and LevelPass
  std::size_t r = 0;
  std::size_t depth = 0;               // recursion depth, or pass number
  std::optional<std::size_t> s;        // run length, LevelPass only
};

class TraceSink {
public:
  virtual ~TraceSink() = default;
  virtual void on_event(const TraceEvent& event) = 0;
};

/// Sink that stores every event in order of arrival.
class TraceCollector final : public TraceSink {
public:
  void on_event(const TraceEvent& event) override { events.push_back(event); }

  std::size_t count(TracePhase p) const {
    std::size_t c = 0;
    for (const auto& e : events)
      if (e.phase == p) ++c;
    return c;
  }

  std::vector<TraceEvent> events;
};

}  // namespace dcsort
