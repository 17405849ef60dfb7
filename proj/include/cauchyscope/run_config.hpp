#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "cauchyscope/common.hpp"

namespace cauchyscope {

inline constexpr const char* kToolVersion = "0.1.0";

/// Everything a run needs, echoed verbatim into every report so a run can be
/// reproduced from its own output.
struct RunConfig {
  std::string subcommand;
  std::string input_path;  // CSV or JSON samples; empty when generating
  std::string generator;   // mini-language spec; empty when reading a file
  int grid_size = 4096;
  int half_window = 256;
  int max_poles = -1;       // negative: minimal-budget scan for analyze
  int budget_cap = 8;       // cap for the minimal-budget scan
  int tail_depth = -1;      // negative: 3 N + 8 default
  std::optional<double> rank_tol;
  std::optional<double> tail_tol;
  std::optional<double> min_mod_tol;  // absolute override for winding runs
  std::uint64_t seed = 0;
  std::string output_path;  // empty: stdout
  std::string format = "json";
  std::string mode = "falsify";  // certify: falsify | pattern
  std::string p_coeffs;          // winding/plot: comma-separated complex
  std::string q_coeffs;
  int draws = 50;  // probe

  Tolerances tolerances() const;
  nlohmann::json to_json() const;
  static RunConfig from_json(const nlohmann::json& j);
};

struct RunResult {
  int exit_code = 0;
  nlohmann::json body;       // full report envelope
  std::string text;          // non-JSON payload (plot CSV), empty otherwise
};

/// Exit codes: 0 extension verdict / certificate produced, 2 no extension
/// within budget, 1 any error. Parse and precondition failures throw; the
/// CLI main converts them to exit 1.
RunResult run_analyze(const RunConfig& config);
RunResult run_winding(const RunConfig& config);
RunResult run_certify(const RunConfig& config);
RunResult run_plot(const RunConfig& config);
RunResult run_probe(const RunConfig& config);

RunResult dispatch(const RunConfig& config);

}  // namespace cauchyscope
