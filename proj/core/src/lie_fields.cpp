#include "hitchin/lie_fields.hpp"

#include "hitchin/errors.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>
#include <string>

namespace hitchin {

// --- Rng ---------------------------------------------------------------------

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// --- defects -----------------------------------------------------------------

double skew_hermitian_defect(const LatticeForm& field) {
  double worst = 0.0;
  for (int s = 0; s < field.site_count(); ++s) {
    worst = std::max(worst, (field.at(s) + field.at(s).adjoint()).cwiseAbs().maxCoeff());
  }
  return worst;
}

double hermitian_defect(const LatticeForm& field) {
  double worst = 0.0;
  for (int s = 0; s < field.site_count(); ++s) {
    worst = std::max(worst, (field.at(s) - field.at(s).adjoint()).cwiseAbs().maxCoeff());
  }
  return worst;
}

double unitarity_defect(const LatticeForm& field) {
  const int n = field.rank();
  double worst = 0.0;
  for (int s = 0; s < field.site_count(); ++s) {
    const Matrix gram = field.at(s).adjoint() * field.at(s);
    worst = std::max(worst, (gram - Matrix::Identity(n, n)).cwiseAbs().maxCoeff());
  }
  return worst;
}

// --- GaugeAlgebraField -------------------------------------------------------

GaugeAlgebraField::GaugeAlgebraField(LatticeForm field) : field_(std::move(field)) {
  if (field_.degree() != FormDegree::Zero) throw DomainError("GaugeAlgebraField: 0-form required");
  const double defect = skew_hermitian_defect(field_);
  if (defect > 1e-14) {
    throw DomainError("GaugeAlgebraField: not skew-Hermitian (defect " + std::to_string(defect) + ")");
  }
}

GaugeAlgebraField GaugeAlgebraField::zero(const SurfaceGrid& grid, int rank) {
  return GaugeAlgebraField(LatticeForm(grid, FormDegree::Zero, rank));
}

GaugeAlgebraField GaugeAlgebraField::constant(const SurfaceGrid& grid, const Matrix& value) {
  return GaugeAlgebraField(LatticeForm::constant(grid, FormDegree::Zero, value));
}

GaugeAlgebraField& GaugeAlgebraField::operator*=(double factor) {
  field_ *= factor;
  return *this;
}

GaugeAlgebraField& GaugeAlgebraField::operator+=(const GaugeAlgebraField& other) {
  field_ += other.field_;
  return *this;
}

// --- GaugeElement ------------------------------------------------------------

GaugeElement::GaugeElement(LatticeForm field) : field_(std::move(field)) {
  if (field_.degree() != FormDegree::Zero) throw DomainError("GaugeElement: 0-form required");
  const double defect = unitarity_defect(field_);
  if (defect > 1e-12) {
    throw DomainError("GaugeElement: not unitary (defect " + std::to_string(defect) + ")");
  }
}

GaugeElement GaugeElement::identity(const SurfaceGrid& grid, int rank) {
  return constant(grid, Matrix::Identity(rank, rank));
}

GaugeElement GaugeElement::constant(const SurfaceGrid& grid, const Matrix& value) {
  return GaugeElement(LatticeForm::constant(grid, FormDegree::Zero, value));
}

LatticeForm GaugeElement::inverse() const { return adjoint(field_); }

// --- algebra -----------------------------------------------------------------

LatticeForm form_commutator(const LatticeForm& u, const LatticeForm& v) {
  const int p = form_order(u.degree());
  const int q = form_order(v.degree());
  if (p + q > 2) throw DomainError("form_commutator: resulting degree exceeds 2");
  LatticeForm out = wedge(u, v);
  const LatticeForm swapped = wedge(v, u);
  if ((p * q) % 2 == 0) {
    out -= swapped;
  } else {
    out += swapped;
  }
  return out;
}

LatticeForm form_commutator(const OneForm& u, const OneForm& v) {
  return wedge(u, v) + wedge(v, u);
}

OneForm form_commutator(const LatticeForm& f, const OneForm& w) {
  return {form_commutator(f, w.dz), form_commutator(f, w.dzbar)};
}

LatticeForm conj_transpose_form(const LatticeForm& w) {
  FormDegree target;
  if (w.degree() == FormDegree::OneZero) {
    target = FormDegree::ZeroOne;
  } else if (w.degree() == FormDegree::ZeroOne) {
    target = FormDegree::OneZero;
  } else {
    throw DomainError(std::string("conj_transpose_form: pure 1-form required, got degree ") +
                      to_string(w.degree()));
  }
  LatticeForm out(w.grid(), target, w.rank());
  for (int s = 0; s < w.site_count(); ++s) out.at(s) = w.at(s).adjoint();
  return out;
}

LatticeForm adjoint(const LatticeForm& f) {
  LatticeForm out(f.grid(), f.degree(), f.rank());
  for (int s = 0; s < f.site_count(); ++s) out.at(s) = f.at(s).adjoint();
  return out;
}

Complex trace_integrate(const LatticeForm& two_form) {
  if (two_form.degree() != FormDegree::Two) {
    throw DomainError(std::string("trace_integrate: 2-form required, got degree ") +
                      to_string(two_form.degree()));
  }
  Complex sum{};
  for (int s = 0; s < two_form.site_count(); ++s) sum += two_form.at(s).trace();
  const double h = two_form.grid().spacing();
  return sum * Complex{0.0, -2.0} * (h * h);
}

// --- random fields -----------------------------------------------------------

LatticeForm random_form(const SurfaceGrid& grid, FormDegree degree, int rank, std::uint64_t seed,
                        int bandwidth, double amplitude) {
  Rng rng(seed);
  LatticeForm out(grid, degree, rank);
  if (bandwidth <= 0) {
    for (auto& v : out.values()) v = rng.complex_normal();
  } else {
    const int n_side = grid.side_count();
    for (int kx = -bandwidth; kx <= bandwidth; ++kx) {
      for (int ky = -bandwidth; ky <= bandwidth; ++ky) {
        Matrix mode(rank, rank);
        for (int i = 0; i < rank * rank; ++i) mode.data()[i] = rng.complex_normal();
        for (int s = 0; s < grid.site_count(); ++s) {
          const double phase =
              2.0 * std::numbers::pi * (kx * grid.column(s) + ky * grid.row(s)) / n_side;
          out.at(s) += std::polar(1.0, phase) * mode;
        }
      }
    }
  }
  const double peak = out.max_abs();
  if (peak > 0.0) out *= amplitude / peak;
  return out;
}

GaugeAlgebraField random_skew_hermitian(const SurfaceGrid& grid, int rank, std::uint64_t seed,
                                        int bandwidth, double amplitude) {
  LatticeForm m = random_form(grid, FormDegree::Zero, rank, seed, bandwidth, 1.0);
  LatticeForm zeta(grid, FormDegree::Zero, rank);
  for (int s = 0; s < grid.site_count(); ++s) zeta.at(s) = 0.5 * (m.at(s) - m.at(s).adjoint());
  const double peak = zeta.max_abs();
  if (peak > 0.0) zeta *= amplitude / peak;
  return GaugeAlgebraField(std::move(zeta));
}

Matrix matrix_exp(const Matrix& m) { return m.exp(); }

Matrix matrix_log(const Matrix& m) { return m.log(); }

GaugeElement exponentiate(const GaugeAlgebraField& zeta, double epsilon) {
  const LatticeForm& z = zeta.field();
  LatticeForm g(z.grid(), FormDegree::Zero, z.rank());
  for (int s = 0; s < z.site_count(); ++s) {
    const Matrix scaled = epsilon * z.at(s);
    g.at(s) = scaled.exp();
  }
  return GaugeElement(std::move(g));
}

}  // namespace hitchin
