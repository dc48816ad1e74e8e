#include "hitchin/gauge_slice.hpp"

#include "hitchin/errors.hpp"
#include "hitchin/kahler_geometry.hpp"
#include "hitchin/moment_map.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hitchin {

namespace {

Eigen::VectorXd pairings(const TangentVector& x, const OrbitBasis& basis) {
  Eigen::VectorXd b(basis.size());
  for (int i = 0; i < basis.size(); ++i) b(i) = metric_g(basis.vectors[i], x);
  return b;
}

TangentVector combination(const OrbitBasis& basis, const Eigen::VectorXd& coeffs) {
  TangentVector out = TangentVector::zero(basis.vectors.front().grid(), basis.vectors.front().rank());
  for (int i = 0; i < basis.size(); ++i) out += coeffs(i) * basis.vectors[i];
  return out;
}

// Real parameters of a tangent vector: for each site and matrix entry
// (row-major), Re/Im of α^{(0,1)}, then the same for γ^{(1,0)}.
int parameter_count(const SurfaceGrid& grid, int rank) { return 4 * rank * rank * grid.site_count(); }

TangentVector from_parameters(const SurfaceGrid& grid, int rank, const Eigen::VectorXd& p) {
  TangentVector x = TangentVector::zero(grid, rank);
  LatticeForm alpha = x.alpha01();
  LatticeForm gamma = x.gamma10();
  const int half = parameter_count(grid, rank) / 2;
  int k = 0;
  for (int s = 0; s < grid.site_count(); ++s) {
    for (int r = 0; r < rank; ++r) {
      for (int c = 0; c < rank; ++c, k += 2) {
        alpha.at(s)(r, c) = Complex(p(k), p(k + 1));
        gamma.at(s)(r, c) = Complex(p(half + k), p(half + k + 1));
      }
    }
  }
  return {std::move(alpha), std::move(gamma)};
}

void append_form(const LatticeForm& w, Eigen::Ref<Eigen::VectorXd> column, int& row) {
  for (const Complex& v : w.values()) {
    column(row++) = v.real();
    column(row++) = v.imag();
  }
}

}  // namespace

double metric_norm(const TangentVector& x) { return std::sqrt(std::max(0.0, metric_g(x, x))); }

std::vector<GaugeAlgebraField> orbit_generators(const SurfaceGrid& grid, int rank, int count,
                                                std::uint64_t seed, int bandwidth) {
  std::vector<GaugeAlgebraField> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    out.push_back(random_skew_hermitian(grid, rank, derive_seed(seed, static_cast<std::uint64_t>(i)), bandwidth));
  }
  return out;
}

OrbitBasis orbit_basis(const Configuration& c, const std::vector<GaugeAlgebraField>& generators) {
  if (generators.empty()) throw DomainError("orbit_basis: empty generator list");
  const int count = static_cast<int>(generators.size());

  std::vector<TangentVector> all;
  all.reserve(generators.size());
  for (const auto& zeta : generators) all.push_back(gauge_vector_field(c, zeta));

  Eigen::MatrixXd full(count, count);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) full(i, j) = metric_g(all[i], all[j]);
  }
  const double scale = std::max(1e-300, full.cwiseAbs().maxCoeff());
  if ((full - full.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw ConsistencyError("orbit_basis: Gram matrix is not symmetric");
  }
  full = 0.5 * (full + full.transpose()).eval();

  // Greedy pivoting: residual² of X_i against the span of the kept vectors.
  const double max_diag = full.diagonal().maxCoeff();
  std::vector<int> kept;
  OrbitBasis basis;
  for (int i = 0; i < count; ++i) {
    double residual = full(i, i);
    if (!kept.empty()) {
      const int k = static_cast<int>(kept.size());
      Eigen::MatrixXd sub(k, k);
      Eigen::VectorXd cross(k);
      for (int a = 0; a < k; ++a) {
        cross(a) = full(kept[a], i);
        for (int b = 0; b < k; ++b) sub(a, b) = full(kept[a], kept[b]);
      }
      residual -= cross.dot(sub.ldlt().solve(cross));
    }
    if (max_diag > 0.0 && residual > 1e-10 * max_diag) {
      kept.push_back(i);
    } else {
      basis.pruned.push_back(i);
    }
  }
  if (kept.empty()) {
    throw DegenerateBasisError("orbit_basis: every generator acts trivially at this configuration",
                               basis.pruned);
  }

  const int k = static_cast<int>(kept.size());
  basis.gram.resize(k, k);
  for (int a = 0; a < k; ++a) {
    basis.generators.push_back(generators[static_cast<std::size_t>(kept[a])]);
    basis.vectors.push_back(all[static_cast<std::size_t>(kept[a])]);
    for (int b = 0; b < k; ++b) basis.gram(a, b) = full(kept[a], kept[b]);
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(basis.gram, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-10 * eig.eigenvalues().cwiseAbs().maxCoeff()) {
    throw ConsistencyError("orbit_basis: Gram matrix is not positive semidefinite");
  }
  return basis;
}

OrbitBasis orbit_basis(const Configuration& c, const std::vector<std::uint64_t>& generator_seeds,
                       int bandwidth) {
  std::vector<GaugeAlgebraField> generators;
  generators.reserve(generator_seeds.size());
  for (auto seed : generator_seeds) {
    generators.push_back(random_skew_hermitian(c.grid(), c.rank(), seed, bandwidth));
  }
  return orbit_basis(c, generators);
}

double orthogonality_residual(const TangentVector& y, const TangentVector& scale,
                              const OrbitBasis& basis) {
  const double norm = metric_norm(scale);
  if (norm == 0.0) return 0.0;
  double worst = 0.0;
  for (int i = 0; i < basis.size(); ++i) {
    const double denom = norm * std::sqrt(basis.gram(i, i));
    worst = std::max(worst, std::abs(metric_g(y, basis.vectors[i])) / denom);
  }
  return worst;
}

TangentVector project_orthogonal(const Configuration& c, const TangentVector& x,
                                 const OrbitBasis& basis) {
  if (basis.size() == 0) throw DomainError("project_orthogonal: empty basis");
  if (!(c.grid() == x.grid()) || c.rank() != x.rank()) {
    throw DomainError("project_orthogonal: tangent vector does not match configuration");
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(basis.gram, Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  const double condition = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  if (condition > 1e12) throw ConditioningError("project_orthogonal: Gram matrix ill-conditioned", condition);

  const Eigen::LLT<Eigen::MatrixXd> llt(basis.gram);
  TangentVector out = x;
  for (int pass = 0; pass < 2; ++pass) {
    const Eigen::VectorXd coeffs = llt.solve(pairings(out, basis));
    out -= combination(basis, coeffs);
  }

  const double residual = orthogonality_residual(out, x, basis);
  if (residual > 1e-9) {
    throw ConsistencyError("project_orthogonal: orthogonality residual " + std::to_string(residual));
  }
  return out;
}

LinearizedSolutions sample_linearized_solutions(const Configuration& c, const OrbitBasis& basis,
                                                int count, std::uint64_t seed) {
  const SurfaceGrid& grid = c.grid();
  const int n = c.rank();
  const int cols = parameter_count(grid, n);
  const int field_rows = 2 * n * n * grid.site_count();
  const int rows = 2 * field_rows + basis.size();

  Eigen::MatrixXd m(rows, cols);
  Eigen::VectorXd unit = Eigen::VectorXd::Zero(cols);
  for (int j = 0; j < cols; ++j) {
    unit(j) = 1.0;
    const TangentVector x = from_parameters(grid, n, unit);
    unit(j) = 0.0;
    int row = 0;
    auto column = m.col(j);
    append_form(dmoment(c, x), column, row);
    append_form(linearized_eq2(c, x), column, row);
    for (int i = 0; i < basis.size(); ++i) column(row++) = metric_g(basis.vectors[i], x);
  }
  // Bring the three blocks to comparable scales before the SVD.
  for (int r = 0; r < rows; ++r) {
    const double norm = m.row(r).norm();
    if (norm > 0.0) m.row(r) /= norm;
  }

  const Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double cutoff = 1e-10 * sigma(0);
  int rank = 0;
  while (rank < sigma.size() && sigma(rank) > cutoff) ++rank;
  const int nullity = cols - rank;

  LinearizedSolutions out;
  out.nullity = nullity;
  if (nullity == 0) return out;
  const Eigen::MatrixXd kernel = svd.matrixV().rightCols(nullity);
  Rng rng(seed);
  for (int k = 0; k < count; ++k) {
    Eigen::VectorXd weights(nullity);
    for (int i = 0; i < nullity; ++i) weights(i) = rng.normal();
    TangentVector x = from_parameters(grid, n, kernel * weights);
    x *= 1.0 / metric_norm(x);
    out.samples.push_back(std::move(x));
  }
  return out;
}

IdentityReport slice_invariance_check(const Configuration& c, const TangentVector& x,
                                      const OrbitBasis& basis, double threshold) {
  IdentityReport report;
  report.identity_name = "slice_invariance";

  const auto [r1, r2] = selfduality_residuals(c);
  const double residual = std::max(l2_norm(r1), l2_norm(r2));
  const double x_norm = metric_norm(x);
  report.add_value("configuration_residual", residual);
  report.add_value("x_norm", x_norm);
  report.add_value("stabilizer_directions", static_cast<double>(basis.pruned.size()));
  report.add_value("threshold", threshold);
  if (x_norm == 0.0) return report;

  // Preconditions on X are reported, not gated: orbit directions, for
  // instance, miss ker dμ by the d∘d defect of the collocated stencils.
  report.add_value("x_linearized_moment", l2_norm(dmoment(c, x)) / x_norm);
  report.add_value("x_linearized_eq2", l2_norm(linearized_eq2(c, x)) / x_norm);

  const TangentVector xp = project_orthogonal(c, x, basis);
  const double xp_norm = metric_norm(xp);
  report.add_value("projected_norm", xp_norm);
  report.add_discrepancy("projection_orthogonality", orthogonality_residual(xp, x, basis), 1e-9);
  const TangentVector xpp = project_orthogonal(c, xp, basis);
  report.add_discrepancy("projection_idempotence",
                         xp_norm > 0.0 ? metric_norm(xpp - xp) / x_norm : 0.0, 1e-10);

  // X in the orbit span: nothing is left to rotate.
  if (xp_norm <= 1e-9 * x_norm) return report;

  const TangentVector ixp = complex_structure(xp);
  report.add_discrepancy("IX_orbit_orthogonality", orthogonality_residual(ixp, xp, basis), threshold);
  report.add_discrepancy("IX_linearized_eq2", l2_norm(linearized_eq2(c, ixp)) / xp_norm, threshold);

  double weak_moment = 0.0;
  double chain = 0.0;
  for (int i = 0; i < basis.size(); ++i) {
    const double denom = xp_norm * std::sqrt(basis.gram(i, i));
    const GaugeAlgebraField& zeta = basis.generators[static_cast<std::size_t>(i)];
    const double pair_ix = trace_integrate(wedge(zeta.field(), dmoment(c, ixp))).real();
    const double pair_x = trace_integrate(wedge(zeta.field(), dmoment(c, xp))).real();
    weak_moment = std::max(weak_moment, std::abs(pair_ix) / denom);
    // g(X_ζ, 𝓘X') = Tr∫ ζ dμ(X')
    chain = std::max(chain, std::abs(metric_g(basis.vectors[i], ixp) - pair_x) / denom);
  }
  report.add_discrepancy("IX_weak_linearized_moment", weak_moment, threshold);
  report.add_discrepancy("pairing_chain", chain, 1e-10);
  report.add_value("IX_strong_linearized_moment", l2_norm(dmoment(c, ixp)) / xp_norm);
  return report;
}

}  // namespace hitchin
