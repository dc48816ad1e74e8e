#pragma once

// Plain-text run configuration: flat key = value lines grouped in INI
// sections [grid], [verify], [solve], [spectrum]. Unknown sections or keys
// are rejected.

#include "hitchin/flow_solver.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

namespace hitchin::lab {

/// Malformed or out-of-range configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GridSettings {
  int side_count = 8;
  double side_length = 1.0;
  int rank = 2;
  std::uint64_t seed = 42;
};

struct VerifySettings {
  int trials = 100;
  /// Replaces every per-check tolerance when set.
  std::optional<double> tolerance;
  std::string report = "verify_report.jsonl";
};

struct SolveSettings {
  FlowParams flow{};
  double amplitude = 0.5;
  /// Configuration file to continue from; empty for a fresh random start.
  std::string resume;
  std::string trace = "flow_trace.csv";
  std::string output = "flow_final.cfg";
};

struct SpectrumSettings {
  int k = 10;
  /// "random" or "identity".
  std::string gauge = "random";
  double gauge_amplitude = 2.0;
  double field_amplitude = 0.5;
  std::string report = "spectrum.json";
};

struct RunConfig {
  GridSettings grid;
  VerifySettings verify;
  SolveSettings solve;
  SpectrumSettings spectrum;
};

RunConfig parse_run_config(std::istream& in);
RunConfig load_run_config(const std::filesystem::path& path);

/// Worker count: HITCHIN_LAB_THREADS if set (positive integer), otherwise
/// the hardware concurrency. Throws ConfigError on a malformed value.
int thread_budget();

}  // namespace hitchin::lab
