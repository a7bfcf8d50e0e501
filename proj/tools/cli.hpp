#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "sparsenerve/filtration.hpp"
#include "sparsenerve/metric.hpp"
#include "sparsenerve/oracle.hpp"

namespace sparsenerve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

enum class InputKind { matrix, points };
enum class OutputFormat { json, text };

struct RunConfig {
  std::string input;  // "-" reads standard input
  InputKind kind = InputKind::matrix;
  Norm metric = Norm::l2;
  double epsilon = 0.5;
  int skeleton = 1;
  std::string output;  // empty writes to standard output
  OutputFormat format = OutputFormat::json;
  bool verify = false;
  std::size_t budget = oracle::Budget{}.max_cells;
  std::vector<std::size_t> stats_schedule;
  std::uint64_t seed = 0;
  bool header = false;
  CoverMutation mutation = CoverMutation::none;
  std::string dump_filtration;
  std::size_t max_cover_checks = 500;
};

/// Throws std::invalid_argument on epsilon <= 0, skeleton < 0 or a zero budget.
void validate(const RunConfig& config);

MetricSpace load_input(const RunConfig& config);

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  CheckStatus status = CheckStatus::pass;
  std::string name;
  std::string detail;
};

/// Grid, packing, cover lemma, interleaving, reconstruction, generator count and
/// homology checks against the brute-force oracles. Budget overruns become SKIP.
std::vector<CheckResult> run_checks(const MetricSpace& m, const RunConfig& config);

/// "PASS name detail" per line.
void print_checks(std::ostream& out, const std::vector<CheckResult>& checks);

int cmd_build(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_stats(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments ("build" | "verify" | "stats" followed by flags) and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sparsenerve::cli
