#include "hitchin/hitchin_config.hpp"

#include "hitchin/errors.hpp"

#include <cmath>
#include <string>

namespace hitchin {

namespace {

LatticeForm negated_adjoint(const LatticeForm& w) { return -conj_transpose_form(w); }

void require_same_space(const SurfaceGrid& a, int rank_a, const SurfaceGrid& b, int rank_b,
                        const char* op) {
  if (!(a == b) || rank_a != rank_b) {
    throw DomainError(std::string(op) + ": grid or rank mismatch");
  }
}

}  // namespace

// --- Configuration -----------------------------------------------------------

Configuration::Configuration(LatticeForm a01, LatticeForm phi10)
    : a01_(std::move(a01)), phi10_(std::move(phi10)) {
  if (a01_.degree() != FormDegree::ZeroOne) throw DomainError("Configuration: A must be a (0,1)-form");
  if (phi10_.degree() != FormDegree::OneZero) throw DomainError("Configuration: Φ must be a (1,0)-form");
  require_same_space(a01_.grid(), a01_.rank(), phi10_.grid(), phi10_.rank(), "Configuration");
}

Configuration Configuration::zero(const SurfaceGrid& grid, int rank) {
  return {LatticeForm(grid, FormDegree::ZeroOne, rank), LatticeForm(grid, FormDegree::OneZero, rank)};
}

LatticeForm Configuration::a10() const { return negated_adjoint(a01_); }

OneForm Configuration::connection() const { return {a10(), a01_}; }

LatticeForm Configuration::phi_adjoint() const { return conj_transpose_form(phi10_); }

double Configuration::unitarity_defect() const {
  // A = a_x dx + a_y dy with a_x = A10 + A01, a_y = i (A10 - A01).
  const LatticeForm a10_form = a10();
  double worst = 0.0;
  for (int s = 0; s < a01_.site_count(); ++s) {
    const Matrix ax = a10_form.at(s) + a01_.at(s);
    const Matrix ay = kI * (a10_form.at(s) - a01_.at(s));
    worst = std::max(worst, (ax + ax.adjoint()).cwiseAbs().maxCoeff());
    worst = std::max(worst, (ay + ay.adjoint()).cwiseAbs().maxCoeff());
  }
  return worst;
}

// --- TangentVector -----------------------------------------------------------

TangentVector::TangentVector(LatticeForm alpha01, LatticeForm gamma10)
    : alpha01_(std::move(alpha01)), gamma10_(std::move(gamma10)) {
  if (alpha01_.degree() != FormDegree::ZeroOne) throw DomainError("TangentVector: α must be a (0,1)-form");
  if (gamma10_.degree() != FormDegree::OneZero) throw DomainError("TangentVector: γ must be a (1,0)-form");
  require_same_space(alpha01_.grid(), alpha01_.rank(), gamma10_.grid(), gamma10_.rank(),
                     "TangentVector");
}

TangentVector TangentVector::zero(const SurfaceGrid& grid, int rank) {
  return {LatticeForm(grid, FormDegree::ZeroOne, rank), LatticeForm(grid, FormDegree::OneZero, rank)};
}

LatticeForm TangentVector::alpha10() const { return negated_adjoint(alpha01_); }
LatticeForm TangentVector::gamma01() const { return negated_adjoint(gamma10_); }
OneForm TangentVector::alpha() const { return {alpha10(), alpha01_}; }
OneForm TangentVector::gamma() const { return {gamma10_, gamma01()}; }

TangentVector& TangentVector::operator+=(const TangentVector& other) {
  alpha01_ += other.alpha01_;
  gamma10_ += other.gamma10_;
  return *this;
}

TangentVector& TangentVector::operator-=(const TangentVector& other) {
  alpha01_ -= other.alpha01_;
  gamma10_ -= other.gamma10_;
  return *this;
}

TangentVector& TangentVector::operator*=(double factor) {
  alpha01_ *= factor;
  gamma10_ *= factor;
  return *this;
}

double TangentVector::coefficient_norm() const {
  return std::hypot(alpha01_.coefficient_norm(), gamma10_.coefficient_norm());
}

TangentVector operator+(TangentVector lhs, const TangentVector& rhs) { return lhs += rhs; }
TangentVector operator-(TangentVector lhs, const TangentVector& rhs) { return lhs -= rhs; }
TangentVector operator*(double factor, TangentVector v) { return v *= factor; }

Configuration random_configuration(const SurfaceGrid& grid, int rank, std::uint64_t seed,
                                   double amplitude) {
  return {random_form(grid, FormDegree::ZeroOne, rank, derive_seed(seed, 10), 2, amplitude),
          random_form(grid, FormDegree::OneZero, rank, derive_seed(seed, 11), 2, amplitude)};
}

TangentVector random_tangent(const SurfaceGrid& grid, int rank, std::uint64_t seed, double amplitude) {
  return {random_form(grid, FormDegree::ZeroOne, rank, derive_seed(seed, 0), 2, amplitude),
          random_form(grid, FormDegree::OneZero, rank, derive_seed(seed, 1), 2, amplitude)};
}

Configuration displace(const Configuration& c, const TangentVector& x, double t) {
  return {c.a01() + t * x.alpha01(), c.phi10() + t * x.gamma10()};
}

TangentVector difference(const Configuration& c1, const Configuration& c0) {
  return {c1.a01() - c0.a01(), c1.phi10() - c0.phi10()};
}

// --- residuals ---------------------------------------------------------------

LatticeForm curvature(const Configuration& c) {
  const OneForm a = c.connection();
  LatticeForm f = d(a) + wedge(a, a);
  const double scale = 1.0 + f.max_abs();
  const double defect = hermitian_defect(f);
  if (defect > 1e-10 * scale) {
    throw ConsistencyError("curvature: dx∧dy component not skew-Hermitian (defect " +
                           std::to_string(defect) + ")");
  }
  return f;
}

LatticeForm higgs_residual(const Configuration& c) {
  // ∂̄ applied to the coefficient of Φ = φ dz, then wedged with dz.
  LatticeForm phi_coefficient(c.grid(), FormDegree::Zero, c.rank());
  std::copy(c.phi10().values().begin(), c.phi10().values().end(), phi_coefficient.values().begin());
  const LatticeForm dz_unit =
      LatticeForm::constant(c.grid(), FormDegree::OneZero, Matrix::Identity(c.rank(), c.rank()));
  return wedge(dbar(phi_coefficient), dz_unit) + form_commutator(c.a01(), c.phi10());
}

std::pair<LatticeForm, LatticeForm> selfduality_residuals(const Configuration& c) {
  LatticeForm r1 = curvature(c) + form_commutator(c.phi10(), c.phi_adjoint());
  return {std::move(r1), higgs_residual(c)};
}

double l2_inner(const LatticeForm& u, const LatticeForm& v) {
  u.require_compatible(v);
  double sum = 0.0;
  auto a = u.values();
  auto b = v.values();
  for (std::size_t i = 0; i < a.size(); ++i) sum += (a[i] * std::conj(b[i])).real();
  const double h = u.grid().spacing();
  return h * h * sum;
}

double l2_norm(const LatticeForm& form) {
  const double h = form.grid().spacing();
  return h * form.coefficient_norm();
}

// --- gauge action ------------------------------------------------------------

Configuration gauge_transform(const Configuration& c, const GaugeElement& g) {
  require_same_space(c.grid(), c.rank(), g.grid(), g.rank(), "gauge_transform");
  const LatticeForm& gf = g.field();
  const LatticeForm g_inv = g.inverse();
  const LatticeForm dbar_g_inv = dbar_forward(g_inv);

  LatticeForm a01(c.grid(), FormDegree::ZeroOne, c.rank());
  LatticeForm phi(c.grid(), FormDegree::OneZero, c.rank());
  for (int s = 0; s < c.grid().site_count(); ++s) {
    a01.at(s) = gf.at(s) * c.a01().at(s) * g_inv.at(s) + gf.at(s) * dbar_g_inv.at(s);
    phi.at(s) = gf.at(s) * c.phi10().at(s) * g_inv.at(s);
  }
  return {std::move(a01), std::move(phi)};
}

TangentVector gauge_vector_field(const Configuration& c, const GaugeAlgebraField& zeta) {
  require_same_space(c.grid(), c.rank(), zeta.grid(), zeta.rank(), "gauge_vector_field");
  const LatticeForm& z = zeta.field();
  const OneForm dz = d(z);
  LatticeForm x01 = -(dz.dzbar - form_commutator(z, c.a01()));
  const LatticeForm x10 = -(dz.dz - form_commutator(z, c.a10()));

  const LatticeForm derived = negated_adjoint(x01);
  const double mismatch = (derived - x10).max_abs();
  if (mismatch > 1e-12 * (1.0 + x10.max_abs())) {
    throw ConsistencyError("gauge_vector_field: (1,0) part disagrees with -(X^{(0,1)})* by " +
                           std::to_string(mismatch));
  }
  return {std::move(x01), form_commutator(z, c.phi10())};
}

LatticeForm linearized_eq2(const Configuration& c, const TangentVector& x) {
  require_same_space(c.grid(), c.rank(), x.grid(), x.rank(), "linearized_eq2");
  // ∂̄γ term is the same stencil as in higgs_residual, with A switched off.
  const Configuration gamma_only(LatticeForm(c.grid(), FormDegree::ZeroOne, c.rank()), x.gamma10());
  return higgs_residual(gamma_only) + form_commutator(x.alpha01(), c.phi10()) +
         form_commutator(c.a01(), x.gamma10());
}

LatticeForm linearized_curvature(const Configuration& c, const TangentVector& x) {
  require_same_space(c.grid(), c.rank(), x.grid(), x.rank(), "linearized_curvature");
  const OneForm beta = x.alpha();
  return d(beta) + form_commutator(beta, c.connection());
}

}  // namespace hitchin
