#pragma once

// Gradient descent on the squared self-duality residual, used to produce
// near-solutions for the geometric checks.

#include "hitchin/hitchin_config.hpp"

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hitchin {

struct FlowParams {
  double step_size = 0.05;
  long max_iters = 100000;
  double target_residual = 1e-8;
  double backtrack = 0.5;
  double growth = 1.5;
  /// Armijo sufficient-decrease constant.
  double armijo = 1e-4;
  /// Start each line search from the Barzilai–Borwein step instead of
  /// step·growth.
  bool bb_steps = true;
  std::uint64_t seed = 0;

  /// Throws DomainError unless step_size > 0, 0 < backtrack < 1, growth > 1,
  /// max_iters >= 0 and target_residual > 0.
  void validate() const;
};

enum class FlowStatus { Converged, MaxIterations, Stagnated };
const char* to_string(FlowStatus status) noexcept;

struct FlowRecord {
  long iter = 0;
  double energy = 0.0;
  double r1_norm = 0.0;
  double r2_norm = 0.0;
  /// Step accepted to reach this state (0 for the starting row).
  double step = 0.0;
};

struct FlowTrace {
  std::vector<FlowRecord> records;
  FlowStatus status = FlowStatus::MaxIterations;

  const FlowRecord& last() const { return records.back(); }
  /// CSV with header `iter,energy,r1_norm,r2_norm,step`, numbers in
  /// shortest round-trip form.
  void write_csv(std::ostream& out, bool header = true) const;
  /// {"status":...,"iterations":...,"energy":...,"r1_norm":...,"r2_norm":...,"step":...}
  std::string status_json() const;
};

struct FlowResult {
  Configuration configuration;
  FlowTrace trace;
  /// Trial step for the next iteration; persisted for resumed runs.
  double next_step = 0.0;
};

/// ‖F + [Φ,Φ*]‖² + ‖d″_AΦ‖².
double energy(const Configuration& c);

/// Gradient of the energy with respect to the metric g, i.e. the tangent
/// vector G with g(G, Y) = dE(Y) for all Y. Assembled from the adjoints of
/// the linearized residual operators.
TangentVector energy_gradient(const Configuration& c);

/// Backtracking gradient descent. Row 0 of the trace is the starting point
/// (numbered `iteration_offset`); each further row is one accepted step.
/// Stops when max(‖r1‖, ‖r2‖) <= target_residual, after max_iters steps, or
/// when the step underflows 1e-16 (reported as Stagnated).
FlowResult gradient_flow(const Configuration& c0, const FlowParams& params, long iteration_offset = 0);

/// A = 0, Φ = value·dz: an exact rank-1 solution. n != 1 → DomainError.
Configuration seed_solution(const SurfaceGrid& grid, int rank, Complex value);

}  // namespace hitchin
