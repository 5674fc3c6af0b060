// Runtime Hoare-triple checking: check modes, structured violations,
// the generic {pre} body {post} checker, and the variant (termination
// measure) check. Violations are values; deep call stacks unwind through
// the internal ViolationError carrier and public entry points convert it
// back into a value.
#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>

#include "core.hpp"

namespace dcsort {

/// How much checking a run performs.
///   Unchecked: no assertions at all; pure algorithm execution.
///   Contracts: method pre/postconditions plus non-interference.
///   Full:      Contracts plus loop invariants at every iteration and
///              the schema provisos at every recursion node.
enum class CheckMode { Unchecked, Contracts, Full };

constexpr bool checks_contracts(CheckMode m) { return m != CheckMode::Unchecked; }
constexpr bool checks_full(CheckMode m) { return m == CheckMode::Full; }

inline const char* check_mode_name(CheckMode m) {
  switch (m) {
    case CheckMode::Unchecked: return "unchecked";
    case CheckMode::Contracts: return "contracts";
    case CheckMode::Full: return "full";
  }
  return "unknown";
}

/// Which proof obligation failed.
enum class Proviso {
  Pre,                 // Q at call entry (incl. Q on child slices)
  Post,                // R at call exit, or an instance fact derived from R
  NonInterference,     // S: state outside the slice changed
  PartitionPredicate,  // P after divide, or P not preserved across a child call
  BaseImpliesShort,    // a non-base slice was shorter than the schema allows
  VariantDecrease,     // recursion measure failed to decrease into a child
  LoopInvariant,       // a loop invariant failed at head, step, or exit
  LoopVariant,         // a loop measure failed to decrease
};

inline const char* proviso_name(Proviso p) {
  switch (p) {
    case Proviso::Pre: return "Pre";
    case Proviso::Post: return "Post";
    case Proviso::NonInterference: return "NonInterference";
    case Proviso::PartitionPredicate: return "PartitionPredicate";
    case Proviso::BaseImpliesShort: return "BaseImpliesShort";
    case Proviso::VariantDecrease: return "VariantDecrease";
    case Proviso::LoopInvariant: return "LoopInvariant";
    case Proviso::LoopVariant: return "LoopVariant";
  }
  return "unknown";
}

/// Where a check fired: algorithm id, slice window, recursion depth.
/// Window fields are raw so that a violation about invalid bounds can
/// still be described.
struct CallSite {
  std::string algo;
  std::size_t l = 0;
  std::size_t r = 0;
  std::size_t n = 0;
  std::size_t depth = 0;
};

/// A contract failure with enough state to replay the failing call.
/// before/after always have equal lengths (possibly both empty for
/// checks that involve no array state).
template <Element T>
struct Violation {
  Proviso proviso = Proviso::Pre;
  CallSite location;
  std::string detail;
  Snapshot<T> before;
  std::vector<T> after;
};

template <Element T>
Violation<T> make_violation(Proviso proviso, CallSite location, std::string detail,
                            Snapshot<T> before, std::vector<T> after) {
  if (before.size() != after.size())
    throw std::logic_error("Violation: before/after lengths must be equal");
  return Violation<T>{proviso, std::move(location), std::move(detail),
                      std::move(before), std::move(after)};
}

/// Internal unwinding carrier. Thrown where a check fails, caught at the
/// public entry point of the run, never surfaced to callers.
template <Element T>
class ViolationError : public std::runtime_error {
public:
  explicit ViolationError(Violation<T> v)
      : std::runtime_error(v.detail), violation_(std::move(v)) {}
  const Violation<T>& violation() const { return violation_; }
  Violation<T>&& take() && { return std::move(violation_); }

private:
  Violation<T> violation_;
};

/// Outcome of a checked run: either a value of type R or a Violation.
template <Element T, typename R = void>
class RunResult {
public:
  RunResult(R value) : state_(std::move(value)) {}
  RunResult(Violation<T> v) : state_(std::move(v)) {}

  bool ok() const { return state_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const R& value() const& {
    if (!ok()) throw std::logic_error("RunResult: no value, run produced a violation");
    return std::get<0>(state_);
  }
  R&& value() && {
    if (!ok()) throw std::logic_error("RunResult: no value, run produced a violation");
    return std::move(std::get<0>(state_));
  }
  const Violation<T>& violation() const {
    if (ok()) throw std::logic_error("RunResult: run succeeded, no violation");
    return std::get<1>(state_);
  }

private:
  std::variant<R, Violation<T>> state_;
};

template <Element T>
class RunResult<T, void> {
public:
  RunResult() = default;
  RunResult(Violation<T> v) : violation_(std::move(v)) {}

  bool ok() const { return !violation_.has_value(); }
  explicit operator bool() const { return ok(); }

  const Violation<T>& violation() const {
    if (ok()) throw std::logic_error("RunResult: run succeeded, no violation");
    return *violation_;
  }

private:
  std::optional<Violation<T>> violation_;
};

/// Run `body` under the triple {pre} body {post}. In checked modes a
/// failing precondition returns Violation(Pre) without running the body;
/// otherwise the state is snapshotted, the body runs, and the two-state
/// postcondition is evaluated. Unchecked mode runs the body and nothing
/// else.
template <Element T, typename Pre, typename Body, typename Post>
  requires std::predicate<Pre, const std::vector<T>&> &&
           std::invocable<Body, std::vector<T>&> &&
           std::predicate<Post, const Snapshot<T>&, const std::vector<T>&>
auto check_triple(std::vector<T>& state, Pre&& pre, Body&& body, Post&& post,
                  CheckMode mode, CallSite site = {})
    -> RunResult<T, std::invoke_result_t<Body, std::vector<T>&>> {
  using R = std::invoke_result_t<Body, std::vector<T>&>;
  using Out = RunResult<T, R>;
  const bool checked = checks_contracts(mode);
  if (checked && !std::invoke(pre, std::as_const(state)))
    return Out(make_violation<T>(Proviso::Pre, site, "precondition failed",
                                 Snapshot<T>(state), state));
  std::optional<Snapshot<T>> old_state;
  if (checked) old_state.emplace(state);
  if constexpr (std::is_void_v<R>) {
    std::invoke(body, state);
    if (checked && !std::invoke(post, *old_state, std::as_const(state)))
      return Out(make_violation<T>(Proviso::Post, site, "postcondition failed",
                                   std::move(*old_state), state));
    return Out();
  } else {
    R out = std::invoke(body, state);
    if (checked && !std::invoke(post, *old_state, std::as_const(state)))
      return Out(make_violation<T>(Proviso::Post, site, "postcondition failed",
                                   std::move(*old_state), state));
    return Out(std::move(out));
  }
}

/// Well-founded decrease: ok iff 0 <= current < previous.
template <Element T = std::int64_t>
RunResult<T> check_variant(std::int64_t previous, std::int64_t current, CallSite site = {}) {
  if (0 <= current && current < previous) return {};
  return RunResult<T>(make_violation<T>(
      Proviso::VariantDecrease, std::move(site),
      "variant must satisfy 0 <= current < previous (previous=" +
          std::to_string(previous) + ", current=" + std::to_string(current) + ")",
      Snapshot<T>{}, {}));
}

/// Aggregate outcome of a randomized verification campaign.
struct VerificationReport {
  std::uint64_t cases_run = 0;
  std::uint64_t seed = 0;
  std::vector<Violation<std::int64_t>> violations;
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return violations.empty(); }
};

}  // namespace dcsort
