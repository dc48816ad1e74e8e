#pragma once

// Curvatures of the determinant line bundles L and R on tangent pairs, and
// the Cauchy–Riemann operator D = ∂̄ + A₀^{(0,1)} + Φ^{(0,1)} with its
// Laplacian, used to probe gauge invariance of the spectrum.

#include "hitchin/hitchin_config.hpp"
#include "hitchin/identity_report.hpp"

#include <Eigen/SparseCore>

#include <string>
#include <vector>

namespace hitchin {

using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

/// Largest n²N² (complex dimension on matrix sections) accepted by the dense
/// eigensolver.
inline constexpr int kDenseSpectrumCap = 1024;

/// Fixed unitary connection A₀, held by its (0,1) part. On the lattice it
/// acts through link matrices U_μ(s) = exp(h a_μ(s)) with
/// a_x = A₀^{(1,0)} + A₀^{(0,1)} and a_y = i(A₀^{(1,0)} - A₀^{(0,1)}).
class ReferenceConnection {
 public:
  explicit ReferenceConnection(LatticeForm a01);
  static ReferenceConnection zero(const SurfaceGrid& grid, int rank);
  /// Inverse of link(): a_μ = log(U_μ)/h, A₀^{(0,1)} = (a_x + i a_y)/2.
  static ReferenceConnection from_links(const LatticeForm& ux, const LatticeForm& uy);

  const SurfaceGrid& grid() const noexcept { return a01_.grid(); }
  int rank() const noexcept { return a01_.rank(); }
  const LatticeForm& a01() const noexcept { return a01_; }
  LatticeForm a10() const;

  /// U_x (direction 0) or U_y (direction 1) as a 0-form of unitaries.
  LatticeForm link(int direction) const;

 private:
  LatticeForm a01_;
};

/// Link matrices of a reference connection; the operator is assembled from
/// these, so gauge transformations can act on them without a log/exp trip.
struct LinkField {
  LatticeForm ux;
  LatticeForm uy;
};
LinkField links(const ReferenceConnection& a0);
/// U_μ(x) ↦ g(x) U_μ(x) g(x+e_μ)⁻¹.
LinkField gauge_transform_links(const LinkField& u, const GaugeElement& g);

/// Φ^{(0,1)} = -(Φ^{(1,0)})*.
LatticeForm phi01_from_phi10(const LatticeForm& phi10);
/// Inverse map Φ^{(1,0)} = -(Φ^{(0,1)})*.
LatticeForm phi10_from_phi01(const LatticeForm& phi01);

/// 𝓕_𝓛(X,Y) = (i/π) Re Tr∫(α^{(0,1)} ∧ β^{(0,1)*}).
Complex curv_L(const TangentVector& x, const TangentVector& y);

struct SectionCurvatures {
  /// -2·𝓕_𝓛.
  Complex l_minus2;
  /// 2(i/π) Re Tr∫(γ^{(0,1)} ∧ δ^{(0,1)*}) with γ^{(0,1)} = -(γ^{(1,0)})*.
  Complex r2_natural;
  /// 2(i/π) Re Tr∫(conj(γ^{(1,0)}) ∧ conj(δ^{(1,0)*})).
  Complex r2_conjugated;
};

/// Throws ConsistencyError if the two 𝓡² variants differ by more than 1e-11
/// relative.
SectionCurvatures curv_P_sections(const TangentVector& x, const TangentVector& y);

/// 𝓕_{𝓛⁻²} + 𝓕_{𝓡²} against (i/π)Ω(X,Y); tolerance 1e-10.
IdentityReport prequantum_check(const TangentVector& x, const TangentVector& y);

/// D and D̃ on n×n matrix sections (left multiplication). A section is a
/// 0-form; vector index = site·n² + col·n + row.
///   D s(x)  = [U_x(x)s(x+e_x) - s(x) + i(U_y(x)s(x+e_y) - s(x))]/(2h) + Φ^{(0,1)}(x)s(x)
///   D̃ s(x) = [s(x) - U_x*(x-e_x)s(x-e_x) - i(s(x) - U_y*(x-e_y)s(x-e_y))]/(2h) + Φ^{(1,0)}(x)s(x)
/// With A₀ = 0 these are the forward ∂̄ and backward ∂ stencils.
struct DiscreteCROperator {
  SurfaceGrid grid;
  int rank = 0;
  SparseMatrix d;
  SparseMatrix d_tilde;

  int dimension() const { return static_cast<int>(d.rows()); }
  Eigen::VectorXcd to_vector(const LatticeForm& section) const;
  LatticeForm to_section(const Eigen::VectorXcd& v) const;
  LatticeForm apply(const LatticeForm& section) const;
  LatticeForm apply_tilde(const LatticeForm& section) const;
  /// Δ = D̃D.
  SparseMatrix laplacian() const;
};

/// Throws DomainError on grid/rank mismatch or if Φ is not a (1,0)-form.
DiscreteCROperator build_cr_operator(const ReferenceConnection& a0, const LatticeForm& phi10);
DiscreteCROperator build_cr_operator(const LinkField& u, const LatticeForm& phi10);

/// Link rule above, with A₀ read back from the transformed links; D built
/// from the result equals g D g⁻¹ up to the log/exp round trip.
ReferenceConnection gauge_transform_reference(const ReferenceConnection& a0, const GaugeElement& g);
/// Φ ↦ gΦg⁻¹.
LatticeForm gauge_transform_higgs(const LatticeForm& phi10, const GaugeElement& g);
/// s ↦ g s.
LatticeForm gauge_section(const LatticeForm& section, const GaugeElement& g);

struct SpectrumReport {
  int k = 0;
  /// Lowest k eigenvalues of -Δ = D*D (ascending, nonnegative).
  std::vector<double> eigenvalues_base;
  std::vector<double> eigenvalues_gauged;
  int kernel_base = 0;
  int kernel_gauged = 0;
  double max_rel_discrepancy = 0.0;
  /// max_i ‖Δ_g(g v_i) - λ_i g v_i‖ / max(1, λ_i) over the k eigenvectors.
  double eigenvector_residual = 0.0;
  bool pass = false;
  IdentityReport report;

  /// {k, eigenvalues_base[], eigenvalues_gauged[], max_rel_discrepancy, pass}
  std::string to_json() const;
};

/// Eigenvalues below this count towards the kernel dimension.
inline constexpr double kKernelThreshold = 1e-10;

/// Dense Hermitian eigensolve of Δ and Δ_g, with Δ_g assembled from the
/// gauge-transformed links and Higgs field. Throws DomainError when n²N²
/// exceeds kDenseSpectrumCap or k is out of range; NumericalError if the
/// eigensolver fails.
SpectrumReport laplacian_spectrum_invariance(const ReferenceConnection& a0, const LatticeForm& phi10,
                                             const GaugeElement& g, int k);

}  // namespace hitchin
