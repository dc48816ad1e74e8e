#include "hitchin/quillen_curvature.hpp"

#include "hitchin/errors.hpp"
#include "hitchin/kahler_geometry.hpp"

#include <Eigen/Eigenvalues>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hitchin {

namespace {

constexpr Complex kIOverPi{0.0, 1.0 / std::numbers::pi};

void require_pure(const LatticeForm& w, FormDegree degree, const char* op) {
  if (w.degree() != degree) {
    throw DomainError(std::string(op) + ": expected degree " + to_string(degree) + ", got " +
                      to_string(w.degree()));
  }
}

// Re Tr∫ of a 2-form, as used by every curvature display.
double re_trace_integral(const LatticeForm& two_form) { return trace_integrate(two_form).real(); }

using Triplet = Eigen::Triplet<Complex>;

int section_index(int site, int row, int col, int n) { return site * n * n + col * n + row; }

// Appends the block  value·M  acting by left multiplication from site `from`
// into site `to`: (M s)(i,j) = Σ_k M(i,k) s(k,j).
void add_block(std::vector<Triplet>& out, int to, int from, const Matrix& m, int n) {
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        if (m(i, k) != Complex{}) out.emplace_back(section_index(to, i, j, n), section_index(from, k, j, n), m(i, k));
      }
    }
  }
}

LatticeForm sitewise(const LatticeForm& a, const LatticeForm& b, const LatticeForm& c) {
  // a b c* sitewise, as 0-forms.
  LatticeForm out(a.grid(), FormDegree::Zero, a.rank());
  for (int s = 0; s < a.site_count(); ++s) out.at(s) = a.at(s) * b.at(s) * c.at(s).adjoint();
  return out;
}

}  // namespace

// --- ReferenceConnection -----------------------------------------------------

ReferenceConnection::ReferenceConnection(LatticeForm a01) : a01_(std::move(a01)) {
  require_pure(a01_, FormDegree::ZeroOne, "ReferenceConnection");
}

ReferenceConnection ReferenceConnection::zero(const SurfaceGrid& grid, int rank) {
  return ReferenceConnection(LatticeForm(grid, FormDegree::ZeroOne, rank));
}

LatticeForm ReferenceConnection::a10() const { return -conj_transpose_form(a01_); }

LatticeForm ReferenceConnection::link(int direction) const {
  if (direction != 0 && direction != 1) throw DomainError("ReferenceConnection::link: direction must be 0 or 1");
  const double h = grid().spacing();
  LatticeForm u(grid(), FormDegree::Zero, rank());
  for (int s = 0; s < grid().site_count(); ++s) {
    const Matrix a = a01_.at(s);
    const Matrix a10 = -a.adjoint();
    const Matrix generator = direction == 0 ? Matrix(a10 + a) : Matrix(kI * (a10 - a));
    u.at(s) = matrix_exp(h * generator);
  }
  return u;
}

ReferenceConnection ReferenceConnection::from_links(const LatticeForm& ux, const LatticeForm& uy) {
  require_pure(ux, FormDegree::Zero, "ReferenceConnection::from_links");
  require_pure(uy, FormDegree::Zero, "ReferenceConnection::from_links");
  ux.require_compatible(uy);
  const double h = ux.grid().spacing();
  LatticeForm a01(ux.grid(), FormDegree::ZeroOne, ux.rank());
  for (int s = 0; s < ux.site_count(); ++s) {
    const Matrix ax = matrix_log(ux.at(s)) / h;
    const Matrix ay = matrix_log(uy.at(s)) / h;
    a01.at(s) = 0.5 * (ax + kI * ay);
  }
  return ReferenceConnection(std::move(a01));
}

// --- curvature displays ------------------------------------------------------

LatticeForm phi01_from_phi10(const LatticeForm& phi10) {
  require_pure(phi10, FormDegree::OneZero, "phi01_from_phi10");
  return -conj_transpose_form(phi10);
}

LatticeForm phi10_from_phi01(const LatticeForm& phi01) {
  require_pure(phi01, FormDegree::ZeroOne, "phi10_from_phi01");
  return -conj_transpose_form(phi01);
}

Complex curv_L(const TangentVector& x, const TangentVector& y) {
  return kIOverPi * re_trace_integral(wedge(x.alpha01(), conj_transpose_form(y.alpha01())));
}

SectionCurvatures curv_P_sections(const TangentVector& x, const TangentVector& y) {
  SectionCurvatures out;
  out.l_minus2 = -2.0 * curv_L(x, y);

  const LatticeForm gamma01 = phi01_from_phi10(x.gamma10());
  const LatticeForm delta01 = phi01_from_phi10(y.gamma10());
  out.r2_natural = 2.0 * kIOverPi * re_trace_integral(wedge(gamma01, conj_transpose_form(delta01)));

  const LatticeForm gamma_bar = conjugate_form(x.gamma10());
  const LatticeForm delta_star_bar = conjugate_form(conj_transpose_form(y.gamma10()));
  out.r2_conjugated = 2.0 * kIOverPi * re_trace_integral(wedge(gamma_bar, delta_star_bar));

  const double gap = relative_discrepancy(out.r2_natural, out.r2_conjugated);
  if (gap > 1e-11) {
    throw ConsistencyError("curv_P_sections: R² variants disagree (relative " + std::to_string(gap) + ")");
  }
  return out;
}

IdentityReport prequantum_check(const TangentVector& x, const TangentVector& y) {
  const SectionCurvatures c = curv_P_sections(x, y);
  const Complex total = c.l_minus2 + c.r2_natural;
  const Complex expected = kIOverPi * omega(x, y);

  IdentityReport report;
  report.identity_name = "prequantum_curvature";
  report.add_value("F_L_minus2", c.l_minus2);
  report.add_value("F_R2", c.r2_natural);
  report.add_value("F_R2_conjugated", c.r2_conjugated);
  report.add_value("total", total);
  report.add_value("i_over_pi_omega", expected);
  report.add_discrepancy("total_vs_omega", relative_discrepancy(total, expected), 1e-10);
  report.add_discrepancy("R2_variants", relative_discrepancy(c.r2_natural, c.r2_conjugated), 1e-11);
  return report;
}

// --- Cauchy–Riemann operator -------------------------------------------------

Eigen::VectorXcd DiscreteCROperator::to_vector(const LatticeForm& section) const {
  require_pure(section, FormDegree::Zero, "DiscreteCROperator");
  if (!(section.grid() == grid) || section.rank() != rank) throw DomainError("DiscreteCROperator: section mismatch");
  Eigen::VectorXcd v(dimension());
  for (int s = 0; s < grid.site_count(); ++s) {
    for (int j = 0; j < rank; ++j) {
      for (int i = 0; i < rank; ++i) v(section_index(s, i, j, rank)) = section.at(s)(i, j);
    }
  }
  return v;
}

LatticeForm DiscreteCROperator::to_section(const Eigen::VectorXcd& v) const {
  if (v.size() != dimension()) throw DomainError("DiscreteCROperator: vector length mismatch");
  LatticeForm out(grid, FormDegree::Zero, rank);
  for (int s = 0; s < grid.site_count(); ++s) {
    for (int j = 0; j < rank; ++j) {
      for (int i = 0; i < rank; ++i) out.at(s)(i, j) = v(section_index(s, i, j, rank));
    }
  }
  return out;
}

LatticeForm DiscreteCROperator::apply(const LatticeForm& section) const {
  return to_section(d * to_vector(section));
}

LatticeForm DiscreteCROperator::apply_tilde(const LatticeForm& section) const {
  return to_section(d_tilde * to_vector(section));
}

SparseMatrix DiscreteCROperator::laplacian() const { return (d_tilde * d).pruned(); }

LinkField links(const ReferenceConnection& a0) { return {a0.link(0), a0.link(1)}; }

LinkField gauge_transform_links(const LinkField& u, const GaugeElement& g) {
  if (!(u.ux.grid() == g.grid()) || u.ux.rank() != g.rank()) {
    throw DomainError("gauge_transform_links: grid or rank mismatch");
  }
  const SurfaceGrid& grid = g.grid();
  const LatticeForm& gf = g.field();
  LinkField out{LatticeForm(grid, FormDegree::Zero, g.rank()), LatticeForm(grid, FormDegree::Zero, g.rank())};
  for (int s = 0; s < grid.site_count(); ++s) {
    out.ux.at(s) = gf.at(s) * u.ux.at(s) * gf.at(grid.shifted(s, 1, 0)).adjoint();
    out.uy.at(s) = gf.at(s) * u.uy.at(s) * gf.at(grid.shifted(s, 0, 1)).adjoint();
  }
  return out;
}

DiscreteCROperator build_cr_operator(const ReferenceConnection& a0, const LatticeForm& phi10) {
  if (!(a0.grid() == phi10.grid()) || a0.rank() != phi10.rank()) {
    throw DomainError("build_cr_operator: grid or rank mismatch");
  }
  return build_cr_operator(links(a0), phi10);
}

DiscreteCROperator build_cr_operator(const LinkField& u, const LatticeForm& phi10) {
  require_pure(phi10, FormDegree::OneZero, "build_cr_operator");
  require_pure(u.ux, FormDegree::Zero, "build_cr_operator");
  u.ux.require_compatible(u.uy);
  if (!(u.ux.grid() == phi10.grid()) || u.ux.rank() != phi10.rank()) {
    throw DomainError("build_cr_operator: grid or rank mismatch");
  }
  const SurfaceGrid& grid = phi10.grid();
  const int n = phi10.rank();
  const int dim = n * n * grid.site_count();
  const double h = grid.spacing();
  const Complex c = 1.0 / (2.0 * h);
  const LatticeForm& ux = u.ux;
  const LatticeForm& uy = u.uy;
  const LatticeForm phi01 = phi01_from_phi10(phi10);
  const Matrix id = Matrix::Identity(n, n);

  std::vector<Triplet> d_entries;
  std::vector<Triplet> t_entries;
  for (int s = 0; s < grid.site_count(); ++s) {
    const int east = grid.shifted(s, 1, 0);
    const int north = grid.shifted(s, 0, 1);
    const int west = grid.shifted(s, -1, 0);
    const int south = grid.shifted(s, 0, -1);

    add_block(d_entries, s, s, Matrix(-(1.0 + kI) * c * id + Matrix(phi01.at(s))), n);
    add_block(d_entries, s, east, Matrix(c * ux.at(s)), n);
    add_block(d_entries, s, north, Matrix(kI * c * uy.at(s)), n);

    add_block(t_entries, s, s, Matrix((1.0 - kI) * c * id + Matrix(phi10.at(s))), n);
    add_block(t_entries, s, west, Matrix(-c * ux.at(west).adjoint()), n);
    add_block(t_entries, s, south, Matrix(kI * c * uy.at(south).adjoint()), n);
  }
  DiscreteCROperator op{grid, n, SparseMatrix(dim, dim), SparseMatrix(dim, dim)};
  op.d.setFromTriplets(d_entries.begin(), d_entries.end());
  op.d_tilde.setFromTriplets(t_entries.begin(), t_entries.end());
  return op;
}

ReferenceConnection gauge_transform_reference(const ReferenceConnection& a0, const GaugeElement& g) {
  if (!(a0.grid() == g.grid()) || a0.rank() != g.rank()) {
    throw DomainError("gauge_transform_reference: grid or rank mismatch");
  }
  const LinkField moved = gauge_transform_links(links(a0), g);
  return ReferenceConnection::from_links(moved.ux, moved.uy);
}

LatticeForm gauge_transform_higgs(const LatticeForm& phi10, const GaugeElement& g) {
  require_pure(phi10, FormDegree::OneZero, "gauge_transform_higgs");
  LatticeForm out(phi10.grid(), FormDegree::OneZero, phi10.rank());
  for (int s = 0; s < phi10.site_count(); ++s) {
    out.at(s) = g.field().at(s) * phi10.at(s) * g.field().at(s).adjoint();
  }
  return out;
}

LatticeForm gauge_section(const LatticeForm& section, const GaugeElement& g) {
  require_pure(section, FormDegree::Zero, "gauge_section");
  LatticeForm out(section.grid(), FormDegree::Zero, section.rank());
  for (int s = 0; s < section.site_count(); ++s) out.at(s) = g.field().at(s) * section.at(s);
  return out;
}

// --- spectrum probe ----------------------------------------------------------

std::string SpectrumReport::to_json() const {
  nlohmann::ordered_json j;
  j["k"] = k;
  j["eigenvalues_base"] = eigenvalues_base;
  j["eigenvalues_gauged"] = eigenvalues_gauged;
  j["max_rel_discrepancy"] = max_rel_discrepancy;
  j["pass"] = pass;
  return j.dump();
}

namespace {

struct Eigensystem {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
  Eigen::MatrixXcd operator_matrix;
};

Eigensystem negative_laplacian_eigensystem(const DiscreteCROperator& op, const char* label) {
  Eigensystem out;
  out.operator_matrix = -Eigen::MatrixXcd(op.laplacian());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(out.operator_matrix);
  if (solver.info() != Eigen::Success) {
    throw NumericalError(std::string("laplacian_spectrum_invariance: eigensolver failed for ") + label +
                         " (dimension " + std::to_string(op.dimension()) + ")");
  }
  out.values = solver.eigenvalues();
  out.vectors = solver.eigenvectors();
  return out;
}

int kernel_dimension(const Eigen::VectorXd& values) {
  int count = 0;
  for (double v : values) count += v < kKernelThreshold ? 1 : 0;
  return count;
}

}  // namespace

SpectrumReport laplacian_spectrum_invariance(const ReferenceConnection& a0, const LatticeForm& phi10,
                                             const GaugeElement& g, int k) {
  const SurfaceGrid& grid = a0.grid();
  const int n = a0.rank();
  const long dim = static_cast<long>(n) * n * grid.site_count();
  if (dim > kDenseSpectrumCap) {
    throw DomainError("laplacian_spectrum_invariance: dimension n²N² = " + std::to_string(dim) +
                      " exceeds the dense cap " + std::to_string(kDenseSpectrumCap));
  }
  if (k < 1 || k > dim) {
    throw DomainError("laplacian_spectrum_invariance: k = " + std::to_string(k) + " outside [1, " +
                      std::to_string(dim) + "]");
  }

  const LinkField u = links(a0);
  const DiscreteCROperator base = build_cr_operator(u, phi10);
  const DiscreteCROperator gauged = build_cr_operator(gauge_transform_links(u, g), gauge_transform_higgs(phi10, g));
  const Eigensystem eb = negative_laplacian_eigensystem(base, "Δ");
  const Eigensystem eg = negative_laplacian_eigensystem(gauged, "Δ_g");

  SpectrumReport out;
  out.k = k;
  for (int i = 0; i < k; ++i) {
    out.eigenvalues_base.push_back(eb.values(i));
    out.eigenvalues_gauged.push_back(eg.values(i));
    out.max_rel_discrepancy =
        std::max(out.max_rel_discrepancy, relative_discrepancy(eb.values(i), eg.values(i)));

    const LatticeForm mapped = gauge_section(base.to_section(eb.vectors.col(i)), g);
    const Eigen::VectorXcd w = gauged.to_vector(mapped);
    const double residual = (eg.operator_matrix * w - eb.values(i) * w).norm() / std::max(1.0, std::abs(eb.values(i)));
    out.eigenvector_residual = std::max(out.eigenvector_residual, residual);
  }
  out.kernel_base = kernel_dimension(eb.values);
  out.kernel_gauged = kernel_dimension(eg.values);

  IdentityReport& r = out.report;
  r.identity_name = "laplacian_spectrum_invariance";
  r.add_value("k", static_cast<double>(k));
  r.add_value("dimension", static_cast<double>(dim));
  r.add_value("kernel_base", static_cast<double>(out.kernel_base));
  r.add_value("kernel_gauged", static_cast<double>(out.kernel_gauged));
  r.add_value("lowest_base", eb.values(0));
  r.add_value("lowest_gauged", eg.values(0));
  r.add_discrepancy("eigenvalues", out.max_rel_discrepancy, 1e-9);
  r.add_discrepancy("eigenvector_map", out.eigenvector_residual, 1e-8);
  r.add_discrepancy("kernel_dimension", std::abs(out.kernel_base - out.kernel_gauged), 0.0);
  out.pass = r.pass;
  return out;
}

}  // namespace hitchin
