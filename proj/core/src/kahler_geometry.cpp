#include "hitchin/kahler_geometry.hpp"

#include "hitchin/errors.hpp"

#include <cmath>
#include <string>

namespace hitchin {

namespace {

void require_same_space(const TangentVector& x, const TangentVector& y, const char* op) {
  if (!(x.grid() == y.grid()) || x.rank() != y.rank()) {
    throw DomainError(std::string(op) + ": tangent vectors live on different spaces");
  }
}

PairingValue real_pairing(Complex value) { return {value, std::abs(value.imag())}; }

}  // namespace

PairingValue metric_g_pairing(const TangentVector& x, const TangentVector& y) {
  require_same_space(x, y, "metric_g");
  const Complex connection_part = -trace_integrate(wedge(x.alpha(), hodge1(y.alpha())));
  const LatticeForm star_delta = hodge2(transpose_entries(y.gamma10()));
  const Complex higgs_part = -2.0 * trace_integrate(wedge(x.gamma10(), star_delta)).imag();
  return real_pairing(connection_part + higgs_part);
}

double metric_g(const TangentVector& x, const TangentVector& y) {
  const PairingValue p = metric_g_pairing(x, y);
  if (p.realness_defect > 1e-10 * (1.0 + std::abs(p.value.real()))) {
    throw ConsistencyError("metric_g: imaginary part " + std::to_string(p.value.imag()));
  }
  return p.value.real();
}

PairingValue metric_hitchin_pairing(const TangentVector& x, const TangentVector& y) {
  require_same_space(x, y, "metric_hitchin");
  const LatticeForm& a = x.alpha01();
  const LatticeForm& b = y.alpha01();
  const LatticeForm& c = x.gamma10();
  const LatticeForm& e = y.gamma10();
  const Complex connection_part =
      kI * trace_integrate(wedge(conj_transpose_form(a), b) + wedge(conj_transpose_form(b), a));
  const Complex higgs_part =
      kI * trace_integrate(wedge(c, conj_transpose_form(e)) + wedge(e, conj_transpose_form(c)));
  return real_pairing(connection_part + higgs_part);
}

double metric_hitchin(const TangentVector& x, const TangentVector& y) {
  const PairingValue p = metric_hitchin_pairing(x, y);
  if (p.realness_defect > 1e-10 * (1.0 + std::abs(p.value.real()))) {
    throw ConsistencyError("metric_hitchin: imaginary part " + std::to_string(p.value.imag()));
  }
  return p.value.real();
}

TangentVector complex_structure(const TangentVector& x) {
  return {kI * x.alpha01(), kI * x.gamma10()};
}

PairingValue omega_forms(const TangentVector& x, const TangentVector& y) {
  require_same_space(x, y, "omega");
  const Complex value = trace_integrate(wedge(x.alpha(), y.alpha())) -
                        trace_integrate(wedge(x.gamma(), y.gamma()));
  return real_pairing(value);
}

double omega(const TangentVector& x, const TangentVector& y) {
  const double via_metric = metric_g(x, complex_structure(y));
  const PairingValue via_forms = omega_forms(x, y);
  const double tol = 1e-10 * (1.0 + std::abs(via_metric));
  if (std::abs(via_metric - via_forms.value.real()) > tol || via_forms.realness_defect > tol) {
    throw ConsistencyError("omega: g(X, IY) = " + std::to_string(via_metric) +
                           " but Tr∫α∧β - Tr∫γ∧δ = " + std::to_string(via_forms.value.real()));
  }
  return via_metric;
}

double trace_realness_defect(const Matrix& c) { return std::abs((c * c.adjoint()).trace().imag()); }

}  // namespace hitchin
