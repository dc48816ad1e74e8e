#include "hitchin/errors.hpp"
#include "hitchin/gauge_slice.hpp"
#include "hitchin/kahler_geometry.hpp"
#include "hitchin/moment_map.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hitchin;

namespace {

Configuration rank_one_solution(const SurfaceGrid& g, Complex value) {
  return {LatticeForm(g, FormDegree::ZeroOne, 1),
          LatticeForm::constant(g, FormDegree::OneZero, Matrix::Constant(1, 1, value))};
}

}  // namespace

TEST(OrbitBasis, ConstantGeneratorsAtAbelianSolutionArePruned) {
  const auto g = make_torus_grid(6, 1.0);
  const auto c = rank_one_solution(g, {1.0, 0.5});
  const std::vector<GaugeAlgebraField> gens{GaugeAlgebraField::constant(g, Matrix::Constant(1, 1, Complex(0, 1))),
                                            GaugeAlgebraField::constant(g, Matrix::Constant(1, 1, Complex(0, -2)))};
  try {
    orbit_basis(c, gens);
    FAIL() << "expected DegenerateBasisError";
  } catch (const DegenerateBasisError& e) {
    EXPECT_EQ(e.pruned(), (std::vector<int>{0, 1}));
  }
}

TEST(OrbitBasis, ConstantGeneratorPrunedAlongsideSmoothOnes) {
  const auto g = make_torus_grid(6, 1.0);
  const auto c = rank_one_solution(g, {1.0, 0.5});
  auto gens = orbit_generators(g, 1, 3, 9);
  gens.insert(gens.begin() + 1, GaugeAlgebraField::constant(g, Matrix::Constant(1, 1, Complex(0, 1))));
  const auto basis = orbit_basis(c, gens);
  EXPECT_EQ(basis.size(), 3);
  EXPECT_EQ(basis.pruned, std::vector<int>{1});
}

TEST(OrbitBasis, GenericGramIsPositiveDefinite) {
  const auto g = make_torus_grid(8, 1.0);
  const auto c = random_configuration(g, 2, 3);
  const auto basis = orbit_basis(c, orbit_generators(g, 2, 8, 4));
  EXPECT_EQ(basis.size(), 8);
  EXPECT_TRUE(basis.pruned.empty());
  EXPECT_LE((basis.gram - basis.gram.transpose()).cwiseAbs().maxCoeff(), 0.0);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(basis.gram);
  EXPECT_GT(eig.eigenvalues().minCoeff(), 0.0);
}

TEST(OrbitBasis, DuplicateGeneratorIsPruned) {
  const auto g = make_torus_grid(8, 1.0);
  const auto c = random_configuration(g, 2, 3);
  auto gens = orbit_generators(g, 2, 4, 5);
  gens.push_back(gens[2]);
  const auto basis = orbit_basis(c, gens);
  EXPECT_EQ(basis.size(), 4);
  EXPECT_EQ(basis.pruned, std::vector<int>{4});
}

TEST(OrbitBasis, SeedOverloadMatchesGenerators) {
  const auto g = make_torus_grid(6, 1.0);
  const auto c = random_configuration(g, 2, 3);
  const auto a = orbit_basis(c, std::vector<std::uint64_t>{11, 12, 13});
  EXPECT_EQ(a.size(), 3);
  EXPECT_THROW(orbit_basis(c, std::vector<GaugeAlgebraField>{}), DomainError);
}

class Projection : public ::testing::Test {
 protected:
  SurfaceGrid grid = make_torus_grid(8, 1.0);
  Configuration config = random_configuration(grid, 2, 21);
  OrbitBasis basis = orbit_basis(config, orbit_generators(grid, 2, 6, 22));
};

TEST_F(Projection, AnnihilatesOrbitSpan) {
  TangentVector x = 0.7 * basis.vectors[0];
  x += -1.3 * basis.vectors[4];
  const auto xp = project_orthogonal(config, x, basis);
  EXPECT_LE(metric_norm(xp), 1e-9 * metric_norm(x));
}

TEST_F(Projection, OrthogonalInputUnchanged) {
  const auto x = project_orthogonal(config, random_tangent(grid, 2, 23), basis);
  const auto xp = project_orthogonal(config, x, basis);
  EXPECT_LE(metric_norm(xp - x), 1e-10 * metric_norm(x));
}

TEST_F(Projection, RandomInputBecomesOrthogonal) {
  for (int trial = 0; trial < 5; ++trial) {
    const auto x = random_tangent(grid, 2, derive_seed(24, trial));
    const auto xp = project_orthogonal(config, x, basis);
    EXPECT_LE(orthogonality_residual(xp, x, basis), 1e-9);
    EXPECT_GT(metric_norm(xp), 0.1 * metric_norm(x));
  }
}

TEST_F(Projection, SelfAdjoint) {
  const auto x = random_tangent(grid, 2, 25);
  const auto y = random_tangent(grid, 2, 26);
  const double a = metric_g(project_orthogonal(config, x, basis), y);
  const double b = metric_g(x, project_orthogonal(config, y, basis));
  EXPECT_LE(std::abs(a - b), 1e-9 * (1 + std::abs(a)));
}

TEST_F(Projection, IllConditionedGramRejected) {
  OrbitBasis bad = basis;
  bad.gram = Eigen::MatrixXd::Identity(bad.size(), bad.size());
  bad.gram(0, 0) = 1e-13;
  EXPECT_THROW(project_orthogonal(config, random_tangent(grid, 2, 1), bad), ConditioningError);
}

TEST(LinearizedSolutions, SatisfyConstraints) {
  const auto g = make_torus_grid(4, 1.0);
  const auto c = random_configuration(g, 2, 31, 0.5);
  const auto basis = orbit_basis(c, orbit_generators(g, 2, 5, 32));
  const auto sols = sample_linearized_solutions(c, basis, 3, 33);
  EXPECT_GT(sols.nullity, 0);
  ASSERT_EQ(sols.samples.size(), 3u);
  for (const auto& x : sols.samples) {
    EXPECT_NEAR(metric_norm(x), 1.0, 1e-12);
    EXPECT_LE(l2_norm(dmoment(c, x)), 1e-9);
    EXPECT_LE(l2_norm(linearized_eq2(c, x)), 1e-9);
    EXPECT_LE(orthogonality_residual(x, x, basis), 1e-9);
  }
}

TEST(SliceInvariance, RankOneExactSolution) {
  const auto g = make_torus_grid(6, 1.0);
  const auto c = rank_one_solution(g, {0.8, -0.3});
  const auto basis = orbit_basis(c, orbit_generators(g, 1, 6, 41));
  const auto sols = sample_linearized_solutions(c, basis, 2, 42);
  ASSERT_FALSE(sols.samples.empty());
  for (const auto& x : sols.samples) {
    const auto report = slice_invariance_check(c, x, basis, 1e-8);
    EXPECT_TRUE(report.pass) << report.to_json_line();
  }
}

TEST(SliceInvariance, PureOrbitDirectionIsTrivial) {
  const auto g = make_torus_grid(6, 1.0);
  const auto c = rank_one_solution(g, {0.8, -0.3});
  const auto basis = orbit_basis(c, orbit_generators(g, 1, 4, 43));
  const auto report = slice_invariance_check(c, basis.vectors[1], basis, 1e-8);
  EXPECT_TRUE(report.pass) << report.to_json_line();
  bool saw_projection = false;
  for (const auto& v : report.values) {
    if (v.name == "projected_norm") {
      saw_projection = true;
      EXPECT_LE(std::abs(v.value), 1e-9);
    }
  }
  EXPECT_TRUE(saw_projection);
}

TEST(SliceInvariance, FailsAwayFromSolutions) {
  const auto g = make_torus_grid(4, 1.0);
  const auto c = random_configuration(g, 2, 51);
  const auto basis = orbit_basis(c, orbit_generators(g, 2, 4, 52));
  const auto report = slice_invariance_check(c, random_tangent(g, 2, 53), basis, 1e-8);
  EXPECT_FALSE(report.pass);
}
