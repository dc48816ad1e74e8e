#include "hitchin/moment_map.hpp"

#include "hitchin/errors.hpp"

#include <cmath>
#include <string>

namespace hitchin {

namespace {

double real_or_throw(Complex value, const char* what) {
  if (std::abs(value.imag()) > 1e-10 * (1.0 + std::abs(value.real()))) {
    throw ConsistencyError(std::string(what) + ": imaginary part " + std::to_string(value.imag()));
  }
  return value.real();
}

// Tr∫ ζ·w for a 2-form w.
Complex pair_with(const GaugeAlgebraField& zeta, const LatticeForm& w) {
  return trace_integrate(wedge(zeta.field(), w));
}

void check_sides(const char* name, const IdentitySides& sides) {
  const double tol = 1e-10;
  if (relative_discrepancy(sides.lhs, sides.rhs) > tol) {
    throw IdentityViolation(name, sides.lhs, sides.rhs, tol);
  }
}

LatticeForm higgs_variation(const Configuration& c, const LatticeForm& delta10) {
  return form_commutator(delta10, c.phi_adjoint()) +
         form_commutator(c.phi10(), conj_transpose_form(delta10));
}

}  // namespace

MomentValue moment(const Configuration& c) {
  LatticeForm mu = curvature(c) + form_commutator(c.phi10(), c.phi_adjoint());
  const double defect = hermitian_defect(mu);
  if (defect > 1e-10 * (1.0 + mu.max_abs())) {
    throw ConsistencyError("moment: not skew-Hermitian (defect " + std::to_string(defect) + ")");
  }
  return {std::move(mu)};
}

HamiltonianValue hamiltonian(const Configuration& c, const GaugeAlgebraField& zeta) {
  HamiltonianValue out;
  out.curvature_part = real_or_throw(pair_with(zeta, curvature(c)), "hamiltonian h");
  out.higgs_part =
      real_or_throw(pair_with(zeta, form_commutator(c.phi10(), c.phi_adjoint())), "hamiltonian f");
  out.total = out.curvature_part + out.higgs_part;
  return out;
}

IdentitySides dh_curvature(const Configuration& c, const GaugeAlgebraField& zeta,
                           const TangentVector& y) {
  const TangentVector x_zeta = gauge_vector_field(c, zeta);
  IdentitySides sides;
  sides.lhs = real_or_throw(pair_with(zeta, linearized_curvature(c, y)), "dh_curvature lhs");
  sides.rhs = real_or_throw(trace_integrate(wedge(x_zeta.alpha(), y.alpha())), "dh_curvature rhs");
  check_sides("dh_curvature", sides);
  return sides;
}

IdentitySides df_higgs(const Configuration& c, const GaugeAlgebraField& zeta,
                       const TangentVector& y) {
  const TangentVector x_zeta = gauge_vector_field(c, zeta);
  IdentitySides sides;
  sides.lhs = real_or_throw(pair_with(zeta, higgs_variation(c, y.gamma10())), "df_higgs lhs");
  sides.rhs =
      2.0 * trace_integrate(wedge(x_zeta.gamma10(), conj_transpose_form(y.gamma10()))).real();
  check_sides("df_higgs", sides);
  return sides;
}

double higgs_trace_lemma_defect(const Matrix& zeta, const Matrix& phi, const Matrix& e) {
  auto bracket = [](const Matrix& a, const Matrix& b) -> Matrix { return a * b - b * a; };
  const Complex lhs = (bracket(zeta, phi) * e.adjoint()).trace().imag();
  const Complex rhs =
      (bracket(phi, e.adjoint()) * zeta + bracket(e, phi.adjoint()) * zeta).trace() / (2.0 * kI);
  return std::abs(lhs - rhs);
}

IdentityReport verify_hamiltonian_identity(const Configuration& c, const GaugeAlgebraField& zeta,
                                           const TangentVector& y, double epsilon) {
  IdentityReport report;
  report.identity_name = "hamiltonian_identity";

  const TangentVector x_zeta = gauge_vector_field(c, zeta);
  const LatticeForm curv_variation = linearized_curvature(c, y);
  const LatticeForm higgs_var = higgs_variation(c, y.gamma10());
  const double curvature_pairing_lhs = pair_with(zeta, curv_variation).real();
  const double curvature_pairing_rhs = trace_integrate(wedge(x_zeta.alpha(), y.alpha())).real();
  const double higgs_pairing_lhs = pair_with(zeta, higgs_var).real();
  const double higgs_pairing_rhs =
      2.0 * trace_integrate(wedge(x_zeta.gamma10(), conj_transpose_form(y.gamma10()))).real();

  const double analytic = curvature_pairing_rhs + higgs_pairing_rhs;
  const double plus = hamiltonian(displace(c, y, epsilon), zeta).total;
  const double minus = hamiltonian(displace(c, y, -epsilon), zeta).total;
  const double finite_difference = (plus - minus) / (2.0 * epsilon);
  const double symplectic = omega(x_zeta, y);

  report.add_value("curvature_pairing_lhs", curvature_pairing_lhs);
  report.add_value("curvature_pairing_rhs", curvature_pairing_rhs);
  report.add_value("higgs_pairing_lhs", higgs_pairing_lhs);
  report.add_value("higgs_pairing_rhs", higgs_pairing_rhs);
  report.add_value("dH_analytic", analytic);
  report.add_value("dH_finite_difference", finite_difference);
  report.add_value("omega_Xzeta_Y", symplectic);

  report.add_discrepancy("curvature_pairing", relative_discrepancy(curvature_pairing_lhs, curvature_pairing_rhs), 1e-10);
  report.add_discrepancy("higgs_pairing", relative_discrepancy(higgs_pairing_lhs, higgs_pairing_rhs), 1e-10);
  report.add_discrepancy("analytic_vs_omega", relative_discrepancy(analytic, symplectic), 1e-10);
  report.add_discrepancy("fd_vs_omega", relative_discrepancy(finite_difference, symplectic), 1e-5);
  return report;
}

LatticeForm dmoment(const Configuration& c, const TangentVector& x) {
  return linearized_curvature(c, x) + higgs_variation(c, x.gamma10());
}

IdentityReport slice_pairing_checks(const Configuration& c, const TangentVector& x,
                                    const GaugeAlgebraField& zeta) {
  IdentityReport report;
  report.identity_name = "slice_pairing_chain";

  const TangentVector x_zeta = gauge_vector_field(c, zeta);
  const TangentVector ix = complex_structure(x);

  const double g_x = metric_g(x_zeta, x);
  const double omega_ix = omega(x_zeta, ix);
  const double moment_ix = real_or_throw(pair_with(zeta, dmoment(c, ix)), "slice chain");
  const double g_ix = metric_g(x_zeta, ix);
  const double omega_x = omega(x_zeta, x);
  const double moment_x = real_or_throw(pair_with(zeta, dmoment(c, x)), "slice chain");

  report.add_value("g(Xzeta,X)", g_x);
  report.add_value("omega(Xzeta,IX)", omega_ix);
  report.add_value("pair(zeta,dmu(IX))", moment_ix);
  report.add_value("g(Xzeta,IX)", g_ix);
  report.add_value("omega(Xzeta,X)", omega_x);
  report.add_value("pair(zeta,dmu(X))", moment_x);

  report.add_discrepancy("g(Xzeta,X)=-omega(Xzeta,IX)", relative_discrepancy(g_x, -omega_ix), 1e-10);
  report.add_discrepancy("omega(Xzeta,IX)=pair(zeta,dmu(IX))",
                         relative_discrepancy(omega_ix, moment_ix), 1e-10);
  report.add_discrepancy("g(Xzeta,IX)=omega(Xzeta,X)", relative_discrepancy(g_ix, omega_x), 1e-10);
  report.add_discrepancy("omega(Xzeta,X)=pair(zeta,dmu(X))",
                         relative_discrepancy(omega_x, moment_x), 1e-10);
  return report;
}

}  // namespace hitchin
