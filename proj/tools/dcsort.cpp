// dcsort command line: sort integer streams, run randomized verification
// campaigns, emit execution traces, and benchmark.
//
// Exit codes: 0 success, 1 contract violation, 2 usage or parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dcsort/bench.hpp"
#include "dcsort/campaign.hpp"
#include "dcsort/dcsort.hpp"
#include "dcsort/json_out.hpp"
#include "dcsort/text_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

dcsort::CheckMode parse_mode(const std::string& name) {
  if (name == "unchecked") return dcsort::CheckMode::Unchecked;
  if (name == "contracts") return dcsort::CheckMode::Contracts;
  if (name == "full") return dcsort::CheckMode::Full;
  throw CLI::ValidationError("--mode", "expected unchecked|contracts|full");
}

std::vector<dcsort::AlgoId> parse_algos(const std::vector<std::string>& names) {
  if (names.empty()) return dcsort::all_algos();
  std::vector<dcsort::AlgoId> algos;
  for (const auto& name : names) {
    const auto id = dcsort::algo_from_name(name);
    if (!id) throw CLI::ValidationError("--algo", "expected rec|iter|quick");
    algos.push_back(*id);
  }
  return algos;
}

std::optional<dcsort::Mutation> parse_mutation(const std::string& name) {
  using dcsort::Mutation;
  for (Mutation m : {Mutation::None, Mutation::CombineSkip, Mutation::FpReturnsLeft,
                     Mutation::MergeIterNoDrain, Mutation::MergePairNoCopyBack,
                     Mutation::PartitionNoExchange})
    if (name == dcsort::mutation_name(m)) return m;
  return std::nullopt;
}

int cmd_sort(const std::string& algo_name, const std::string& mode_name,
             const std::string& input, const std::string& output) {
  const auto algo = dcsort::algo_from_name(algo_name);
  if (!algo) {
    std::cerr << "unknown algorithm: " << algo_name << " (expected rec|iter|quick)\n";
    return kExitUsage;
  }
  const dcsort::CheckMode mode = parse_mode(mode_name);

  std::vector<std::int64_t> values;
  try {
    values = dcsort::parse_int64_list(read_input(input));
  } catch (const dcsort::ParseFailure& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  dcsort::RunResult<std::int64_t> result = [&] {
    switch (*algo) {
      case dcsort::AlgoId::Rec: return dcsort::merge_sort_rec(values, mode);
      case dcsort::AlgoId::Iter: return dcsort::merge_sort_iter(values, mode);
      case dcsort::AlgoId::Quick: return dcsort::quicksort(values, mode);
    }
    return dcsort::RunResult<std::int64_t>{};
  }();
  if (!result.ok()) {
    std::cerr << dcsort::describe_violation(result.violation()) << "\n";
    return kExitViolation;
  }
  write_output(output, dcsort::format_int64_lines(values));
  return kExitOk;
}

int cmd_verify(const std::vector<std::string>& algo_names, std::uint64_t cases,
               std::uint64_t seed, std::size_t max_len, const std::string& inject,
               const std::string& output) {
  if (cases < 1) {
    std::cerr << "--cases must be >= 1\n";
    return kExitUsage;
  }
  dcsort::CampaignConfig config;
  config.algos = parse_algos(algo_names);
  config.cases = cases;
  config.seed = seed;
  config.max_len = max_len;
  config.mode = dcsort::CheckMode::Full;
  if (!inject.empty()) {
    const auto mutation = parse_mutation(inject);
    if (!mutation) {
      std::cerr << "unknown defect name: " << inject << "\n";
      return kExitUsage;
    }
    config.mutation = *mutation;
  }
  const dcsort::VerificationReport report = dcsort::run_campaign(config);
  write_output(output, dcsort::report_to_json(report));
  return report.passed() ? kExitOk : kExitViolation;
}

int cmd_trace(const std::string& algo_name, const std::string& input,
              const std::string& output) {
  const auto algo = dcsort::algo_from_name(algo_name);
  if (!algo) {
    std::cerr << "unknown algorithm: " << algo_name << " (expected rec|iter|quick)\n";
    return kExitUsage;
  }
  std::vector<std::int64_t> values;
  try {
    values = dcsort::parse_int64_list(read_input(input));
  } catch (const dcsort::ParseFailure& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  const std::size_t n = values.size();

  dcsort::TraceCollector collector;
  dcsort::RunResult<std::int64_t> result = [&] {
    switch (*algo) {
      case dcsort::AlgoId::Rec:
        return dcsort::merge_sort_rec(values, dcsort::CheckMode::Unchecked, &collector);
      case dcsort::AlgoId::Iter:
        return dcsort::merge_sort_iter(values, dcsort::CheckMode::Unchecked, &collector);
      case dcsort::AlgoId::Quick:
        return dcsort::quicksort(values, dcsort::CheckMode::Unchecked, &collector);
    }
    return dcsort::RunResult<std::int64_t>{};
  }();
  if (!result.ok()) {
    std::cerr << dcsort::describe_violation(result.violation()) << "\n";
    return kExitViolation;
  }
  write_output(output, dcsort::trace_to_json(algo_name, n, collector.events));
  return kExitOk;
}

int cmd_bench(const std::vector<std::string>& algo_names, const std::vector<std::size_t>& sizes,
              std::size_t repeats, std::uint64_t seed, const std::string& output) {
  if (sizes.empty()) {
    std::cerr << "--sizes must list at least one size\n";
    return kExitUsage;
  }
  if (repeats < 1) {
    std::cerr << "--repeats must be >= 1\n";
    return kExitUsage;
  }
  const auto rows = dcsort::run_bench(parse_algos(algo_names), sizes, repeats, seed);
  // table for humans on stdout (stderr when stdout carries the JSON)
  if (output == "-") {
    std::cerr << dcsort::render_bench_table(rows);
    write_output(output, dcsort::bench_to_json(rows));
  } else {
    std::cout << dcsort::render_bench_table(rows);
    write_output(output, dcsort::bench_to_json(rows));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"contract-checked divide-and-conquer sorting"};
  app.require_subcommand(1);

  std::string algo = "rec";
  std::string mode = "contracts";
  std::string input = "-";
  std::string output = "-";
  std::vector<std::string> algos;
  std::uint64_t cases = 100;
  std::uint64_t seed = 42;
  std::size_t max_len = 64;
  std::string inject;
  std::vector<std::size_t> sizes;
  std::size_t repeats = 3;

  auto* sort_cmd = app.add_subcommand("sort", "sort whitespace-separated integers");
  sort_cmd->add_option("--algo", algo, "rec|iter|quick")->required();
  sort_cmd->add_option("--mode", mode, "unchecked|contracts|full (default contracts)");
  sort_cmd->add_option("--input", input, "input path or - for stdin");
  sort_cmd->add_option("--output", output, "output path or - for stdout");

  auto* verify_cmd =
      app.add_subcommand("verify", "run a randomized full-checking verification campaign");
  verify_cmd->add_option("--algo", algos, "algorithms to verify (default: all)");
  verify_cmd->add_option("--cases", cases, "number of random cases (default 100)");
  verify_cmd->add_option("--seed", seed, "campaign seed (default 42)");
  verify_cmd->add_option("--max-len", max_len, "maximum array length (default 64)");
  verify_cmd->add_option("--output", output, "report path or - for stdout");
  verify_cmd->add_option("--inject", inject, "inject a named defect")->group("");

  auto* trace_cmd = app.add_subcommand("trace", "emit the execution trace as JSON");
  trace_cmd->add_option("--algo", algo, "rec|iter|quick")->required();
  trace_cmd->add_option("--input", input, "input path or - for stdin");
  trace_cmd->add_option("--output", output, "output path or - for stdout");

  auto* bench_cmd = app.add_subcommand("bench", "time the algorithms on seeded random data");
  bench_cmd->add_option("--algo", algos, "algorithms to benchmark (default: all)");
  bench_cmd->add_option("--sizes", sizes, "comma-separated array sizes")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--repeats", repeats, "runs per algo/size (default 3)");
  bench_cmd->add_option("--seed", seed, "data seed (default 42)");
  bench_cmd->add_option("--output", output, "JSON report path or - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sort_cmd->parsed()) return cmd_sort(algo, mode, input, output);
    if (verify_cmd->parsed()) return cmd_verify(algos, cases, seed, max_len, inject, output);
    if (trace_cmd->parsed()) return cmd_trace(algo, input, output);
    if (bench_cmd->parsed()) return cmd_bench(algos, sizes, repeats, seed, output);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
