#include "hitchin/errors.hpp"
#include "hitchin/lie_fields.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hitchin;

namespace {

Matrix random_matrix(Rng& rng, int n) {
  Matrix m(n, n);
  for (int i = 0; i < n * n; ++i) m.data()[i] = rng.complex_normal();
  return m;
}

Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace

TEST(Rng, SeedDeterminism) {
  Rng a(123);
  Rng b(123);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.normal(), b.normal());
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_EQ(derive_seed(5, 7), derive_seed(5, 7));
}

TEST(Rng, UniformRange) {
  Rng r(9);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(FormCommutator, OneFormsSymmetric) {
  const auto g = make_torus_grid(4, 1.0);
  const auto u = random_form(g, FormDegree::OneZero, 2, 1);
  const auto v = random_form(g, FormDegree::ZeroOne, 2, 2);
  const auto uv = form_commutator(u, v);
  const auto vu = form_commutator(v, u);
  EXPECT_LE((uv - vu).max_abs(), 1e-15);
  EXPECT_LE((uv - (wedge(u, v) + wedge(v, u))).max_abs(), 0.0);
}

TEST(FormCommutator, ScalarZeroFormsCommute) {
  const auto g = make_torus_grid(4, 1.0);
  const auto f = random_form(g, FormDegree::Zero, 1, 1);
  for (FormDegree deg : {FormDegree::Zero, FormDegree::OneZero, FormDegree::ZeroOne, FormDegree::Two}) {
    EXPECT_LE(form_commutator(f, random_form(g, deg, 1, 3)).max_abs(), 1e-15);
  }
}

TEST(FormCommutator, ZeroFormWithOneFormIsPointwiseCommutator) {
  const auto g = make_torus_grid(4, 1.0);
  const auto f = random_form(g, FormDegree::Zero, 2, 1);
  const auto w = random_form(g, FormDegree::ZeroOne, 2, 2);
  const auto c = form_commutator(f, w);
  EXPECT_EQ(c.degree(), FormDegree::ZeroOne);
  for (int s = 0; s < g.site_count(); ++s) {
    EXPECT_LE((c.at(s) - bracket(f.at(s), w.at(s))).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(FormCommutator, GradedAntisymmetry) {
  const auto g = make_torus_grid(4, 1.0);
  const FormDegree degrees[] = {FormDegree::Zero, FormDegree::OneZero, FormDegree::ZeroOne};
  for (FormDegree p : degrees) {
    for (FormDegree q : degrees) {
      const auto u = random_form(g, p, 2, 4);
      const auto v = random_form(g, q, 2, 5);
      const int pq = form_order(p) * form_order(q);
      // [u,v] = (-1)^{pq+1} [v,u]
      const double sign = (pq % 2 == 0) ? -1.0 : 1.0;
      EXPECT_LE((form_commutator(u, v) - sign * form_commutator(v, u)).max_abs(), 1e-14);
    }
  }
}

TEST(FormCommutator, RejectsDegreeOverflow) {
  const auto g = make_torus_grid(4, 1.0);
  EXPECT_THROW(form_commutator(LatticeForm(g, FormDegree::Two, 1), LatticeForm(g, FormDegree::OneZero, 1)),
               DomainError);
}

TEST(ConjTranspose, Rules) {
  const auto g = make_torus_grid(4, 1.0);
  const Matrix iid = kI * Matrix::Identity(2, 2);
  const auto w = conj_transpose_form(LatticeForm::constant(g, FormDegree::OneZero, iid));
  EXPECT_EQ(w.degree(), FormDegree::ZeroOne);
  EXPECT_EQ(w.at(0), Matrix(-iid));

  Matrix herm(2, 2);
  herm << 1.0, Complex(2, 1), Complex(2, -1), -3.0;
  const auto h = conj_transpose_form(LatticeForm::constant(g, FormDegree::OneZero, herm));
  EXPECT_EQ(h.at(3), herm);

  const auto r = random_form(g, FormDegree::OneZero, 3, 2);
  EXPECT_EQ((conj_transpose_form(conj_transpose_form(r)) - r).max_abs(), 0.0);
  EXPECT_THROW(conj_transpose_form(LatticeForm(g, FormDegree::Two, 1)), DomainError);
  EXPECT_THROW(conj_transpose_form(LatticeForm(g, FormDegree::Zero, 1)), DomainError);
}

TEST(TraceIntegrate, MatchesDirectSum) {
  const auto g = make_torus_grid(5, 1.7);
  const auto w = random_form(g, FormDegree::Two, 2, 8);
  Complex direct{};
  for (int s = 0; s < g.site_count(); ++s) direct += w.at(s)(0, 0) + w.at(s)(1, 1);
  direct *= Complex(0, -2) * g.spacing() * g.spacing();
  EXPECT_LE(std::abs(trace_integrate(w) - direct), 1e-13 * (1 + std::abs(direct)));
  EXPECT_EQ(trace_integrate(LatticeForm(g, FormDegree::Two, 2)), Complex(0, 0));
  EXPECT_THROW(trace_integrate(LatticeForm(g, FormDegree::OneZero, 2)), DomainError);
}

TEST(TraceIntegrate, BracketMovesAcrossWedge) {
  const auto g = make_torus_grid(5, 1.0);
  const auto u = random_form(g, FormDegree::Zero, 2, 1);
  const auto v = random_form(g, FormDegree::OneZero, 2, 2);
  const auto w = random_form(g, FormDegree::ZeroOne, 2, 3);
  const Complex lhs = trace_integrate(wedge(form_commutator(u, v), w));
  const Complex rhs = trace_integrate(wedge(u, form_commutator(v, w)));
  EXPECT_LE(std::abs(lhs - rhs), 1e-12 * (1 + std::abs(lhs)));
}

TEST(MatrixIdentities, CyclicBracketTrace) {
  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix a = random_matrix(rng, 3);
    const Matrix b = random_matrix(rng, 3);
    const Matrix c = random_matrix(rng, 3);
    EXPECT_LE(std::abs((bracket(a, b) * c).trace() - (bracket(b, c) * a).trace()), 1e-12);
    EXPECT_LE(std::abs((a * b.adjoint()).trace().real() - (b * a.adjoint()).trace().real()), 1e-12);
  }
}

TEST(RandomSkewHermitian, DeterministicAndSkew) {
  const auto g = make_torus_grid(6, 1.0);
  const auto a = random_skew_hermitian(g, 3, 42, 2);
  const auto b = random_skew_hermitian(g, 3, 42, 2);
  EXPECT_EQ((a.field() - b.field()).max_abs(), 0.0);
  EXPECT_EQ(skew_hermitian_defect(a.field()), 0.0);
  const auto scalar = random_skew_hermitian(g, 1, 5);
  for (int s = 0; s < g.site_count(); ++s) EXPECT_EQ(scalar.field().at(s)(0, 0).real(), 0.0);
}

TEST(GaugeAlgebraField, RejectsNonSkew) {
  const auto g = make_torus_grid(4, 1.0);
  EXPECT_THROW(GaugeAlgebraField(LatticeForm::constant(g, FormDegree::Zero, Matrix::Identity(2, 2))),
               DomainError);
}

TEST(GaugeElement, RejectsNonUnitary) {
  const auto g = make_torus_grid(4, 1.0);
  EXPECT_THROW(GaugeElement::constant(g, 2.0 * Matrix::Identity(2, 2)), DomainError);
}

TEST(Exponentiate, ZeroGivesIdentity) {
  const auto g = make_torus_grid(4, 1.0);
  const auto zeta = random_skew_hermitian(g, 2, 3);
  const auto e = exponentiate(zeta, 0.0);
  EXPECT_EQ((e.field() - GaugeElement::identity(g, 2).field()).max_abs(), 0.0);
}

TEST(Exponentiate, ScalarPhase) {
  const auto g = make_torus_grid(4, 1.0);
  const double c = 0.7;
  const double eps = 0.3;
  const auto zeta = GaugeAlgebraField::constant(g, kI * c * Matrix::Identity(1, 1));
  const auto e = exponentiate(zeta, eps);
  for (int s = 0; s < g.site_count(); ++s) {
    EXPECT_LE(std::abs(e.field().at(s)(0, 0) - std::polar(1.0, eps * c)), 1e-15);
  }
}

TEST(Exponentiate, UnitaryForLargeArguments) {
  const auto g = make_torus_grid(4, 1.0);
  const auto zeta = random_skew_hermitian(g, 3, 8, 0, 10.0);
  EXPECT_LE(unitarity_defect(exponentiate(zeta, 1.0).field()), 1e-12);
}

// ‖exp(εζ) - (1 + εζ)‖ = O(ε²): the ratio across a decade of ε is ~100.
TEST(Exponentiate, SecondOrderRemainder) {
  const auto g = make_torus_grid(4, 1.0);
  const auto zeta = random_skew_hermitian(g, 2, 21);
  auto remainder = [&](double eps) {
    const auto e = exponentiate(zeta, eps);
    double worst = 0.0;
    for (int s = 0; s < g.site_count(); ++s) {
      const Matrix lin = Matrix::Identity(2, 2) + eps * zeta.field().at(s);
      worst = std::max(worst, (e.field().at(s) - lin).cwiseAbs().maxCoeff());
    }
    return worst;
  };
  const double ratio = remainder(1e-2) / remainder(1e-3);
  EXPECT_NEAR(ratio, 100.0, 20.0);
}

TEST(MatrixLog, InvertsExp) {
  Rng rng(4);
  Matrix m = random_matrix(rng, 3);
  m = 0.5 * (m - m.adjoint().eval());
  m *= 0.5;
  EXPECT_LE((matrix_log(matrix_exp(m)) - m).cwiseAbs().maxCoeff(), 1e-13);
}
