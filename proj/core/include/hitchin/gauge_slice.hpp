#pragma once

// Finite-dimensional model of the tangent space to the moduli space: the
// part of the tangent space g-orthogonal to a sampled set of gauge orbit
// directions.

#include "hitchin/hitchin_config.hpp"
#include "hitchin/identity_report.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace hitchin {

struct OrbitBasis {
  /// Generators that survived pruning, in input order.
  std::vector<GaugeAlgebraField> generators;
  /// X_ζ for each kept generator.
  std::vector<TangentVector> vectors;
  /// g(X_ζi, X_ζj) over the kept generators.
  Eigen::MatrixXd gram;
  /// Input indices dropped as (numerically) dependent or null.
  std::vector<int> pruned;

  int size() const noexcept { return static_cast<int>(generators.size()); }
};

/// Low-frequency skew-Hermitian generators: generator i is
/// random_skew_hermitian(grid, rank, derive_seed(seed, i), bandwidth).
std::vector<GaugeAlgebraField> orbit_generators(const SurfaceGrid& grid, int rank, int count,
                                                std::uint64_t seed, int bandwidth = 1);

/// Computes X_ζ for each generator and keeps a generator only when its
/// g-distance² to the span of those already kept exceeds 1e-10 times the
/// largest diagonal Gram entry. Throws DegenerateBasisError if nothing
/// survives, DomainError on an empty list, ConsistencyError if the Gram
/// matrix is asymmetric (> 1e-12 relative) or indefinite.
OrbitBasis orbit_basis(const Configuration& c, const std::vector<GaugeAlgebraField>& generators);
OrbitBasis orbit_basis(const Configuration& c, const std::vector<std::uint64_t>& generator_seeds,
                       int bandwidth = 1);

/// X - Σ c_i X_ζi with gram·c = (g(X_ζi, X))_i. The correction is applied
/// twice to clean up rounding. Throws ConditioningError when the Gram
/// condition number exceeds 1e12; throws ConsistencyError when the result
/// is not orthogonal to 1e-9 (see orthogonality_residual).
TangentVector project_orthogonal(const Configuration& c, const TangentVector& x,
                                 const OrbitBasis& basis);

/// max_i |g(Y, X_ζi)| / (‖X‖_g ‖X_ζi‖_g), with X a reference scale vector
/// (usually the unprojected input).
double orthogonality_residual(const TangentVector& y, const TangentVector& scale,
                              const OrbitBasis& basis);

/// ‖X‖_g = sqrt(g(X,X)).
double metric_norm(const TangentVector& x);

struct LinearizedSolutions {
  std::vector<TangentVector> samples;
  /// Dimension of the kernel the samples were drawn from.
  int nullity = 0;
};

/// Random unit-norm tangent vectors X with dμ(X) = 0, d″ linearization
/// L(X) = 0 and g(X, X_ζi) = 0 for every basis vector. The kernel is taken
/// from an SVD of the assembled real constraint matrix (singular values
/// below 1e-10 of the largest count as zero).
LinearizedSolutions sample_linearized_solutions(const Configuration& c, const OrbitBasis& basis,
                                                int count, std::uint64_t seed);

/// 𝓘-invariance of the orthogonal slice at c: with X' the projection of X,
/// checks that X' is orthogonal (1e-9) and idempotent (1e-10), and that 𝓘X'
/// stays orthogonal to the orbit, keeps L(𝓘X') = 0 and pairs to zero with
/// dμ against every generator. The 𝓘X' checks are measured against
/// `threshold`; the configuration residual and the linearization residuals
/// of X are reported as values.
IdentityReport slice_invariance_check(const Configuration& c, const TangentVector& x,
                                      const OrbitBasis& basis, double threshold);

}  // namespace hitchin
