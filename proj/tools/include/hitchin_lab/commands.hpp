#pragma once

#include "hitchin/identity_report.hpp"
#include "hitchin_lab/run_config.hpp"

#include <filesystem>
#include <iosfwd>
#include <vector>

namespace hitchin::lab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// All identity checks for one trial, in a fixed order.
std::vector<IdentityReport> verify_trial(const GridSettings& grid, int trial);

/// Trials 0..trials-1 spread over `threads` workers; reports come back in
/// trial order regardless of scheduling. The tolerance override is applied
/// when present.
std::vector<IdentityReport> run_verify_suite(const GridSettings& grid, const VerifySettings& verify, int threads);

/// Each command writes its outputs into `out`, a short summary to `log`,
/// and `<command>.meta.json` with wall-clock data kept apart from the
/// deterministic payloads.
int cmd_verify(const RunConfig& config, const std::filesystem::path& out, std::ostream& log);
int cmd_solve(const RunConfig& config, const std::filesystem::path& out, std::ostream& log);
int cmd_spectrum(const RunConfig& config, const std::filesystem::path& out, std::ostream& log);

/// argv front end: `verify|solve|spectrum --config <path> [--seed S] [--out DIR]`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hitchin::lab
