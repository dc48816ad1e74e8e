#pragma once

// Configurations (A, Φ) of a unitary connection and a Higgs field, the gauge
// action on them, and the self-duality residuals with their linearizations.

#include "hitchin/lattice_surface.hpp"
#include "hitchin/lie_fields.hpp"

#include <utility>

namespace hitchin {

/// The connection is held by its (0,1) part; A^{(1,0)} = -(A^{(0,1)})* is
/// always derived, which makes the connection unitary by construction.
class Configuration {
 public:
  Configuration(LatticeForm a01, LatticeForm phi10);
  static Configuration zero(const SurfaceGrid& grid, int rank);

  const SurfaceGrid& grid() const noexcept { return a01_.grid(); }
  int rank() const noexcept { return a01_.rank(); }

  const LatticeForm& a01() const noexcept { return a01_; }
  const LatticeForm& phi10() const noexcept { return phi10_; }
  LatticeForm a10() const;
  OneForm connection() const;
  /// Φ* = φ* dz̄.
  LatticeForm phi_adjoint() const;

  /// max |a_μ + a_μ*| over the real-direction components a_x, a_y of A.
  double unitarity_defect() const;

 private:
  LatticeForm a01_;
  LatticeForm phi10_;
};

/// Tangent vector (α, γ^{(1,0)}); α^{(1,0)} = -(α^{(0,1)})* is derived.
class TangentVector {
 public:
  TangentVector(LatticeForm alpha01, LatticeForm gamma10);
  static TangentVector zero(const SurfaceGrid& grid, int rank);

  const SurfaceGrid& grid() const noexcept { return alpha01_.grid(); }
  int rank() const noexcept { return alpha01_.rank(); }

  const LatticeForm& alpha01() const noexcept { return alpha01_; }
  const LatticeForm& gamma10() const noexcept { return gamma10_; }
  LatticeForm alpha10() const;
  /// γ^{(0,1)} = -(γ^{(1,0)})*.
  LatticeForm gamma01() const;
  /// Full real 1-form α = α^{(1,0)} + α^{(0,1)}.
  OneForm alpha() const;
  /// Full real 1-form γ = γ^{(1,0)} + γ^{(0,1)}.
  OneForm gamma() const;

  TangentVector& operator+=(const TangentVector& other);
  TangentVector& operator-=(const TangentVector& other);
  TangentVector& operator*=(double factor);

  /// Euclidean norm of the stored coefficients (no metric weight).
  double coefficient_norm() const;

 private:
  LatticeForm alpha01_;
  LatticeForm gamma10_;
};

TangentVector operator+(TangentVector lhs, const TangentVector& rhs);
TangentVector operator-(TangentVector lhs, const TangentVector& rhs);
TangentVector operator*(double factor, TangentVector v);

/// Smooth random configuration (Fourier bandwidth 2), each field scaled so
/// its largest entry has modulus `amplitude`.
Configuration random_configuration(const SurfaceGrid& grid, int rank, std::uint64_t seed,
                                   double amplitude = 1.0);

/// Random tangent vector with smooth (bandwidth 2) coefficients.
TangentVector random_tangent(const SurfaceGrid& grid, int rank, std::uint64_t seed,
                             double amplitude = 1.0);

/// c + t·X.
Configuration displace(const Configuration& c, const TangentVector& x, double t);
/// (c1 - c0) as a tangent vector.
TangentVector difference(const Configuration& c1, const Configuration& c0);

/// F = dA + A∧A. Throws ConsistencyError if the dx∧dy component is not
/// skew-Hermitian to 1e-10 (relative to the field scale).
LatticeForm curvature(const Configuration& c);

/// d″_A Φ = ∂̄Φ + [A^{(0,1)}, Φ].
LatticeForm higgs_residual(const Configuration& c);

/// (F + [Φ,Φ*], d″_A Φ). Both vanish exactly on solutions.
std::pair<LatticeForm, LatticeForm> selfduality_residuals(const Configuration& c);

/// L² norm of a form: sqrt(h² Σ_s ‖c(s)‖_F²).
double l2_norm(const LatticeForm& form);
/// Real L² pairing h² Σ_s Re Tr(u(s) v(s)*).
double l2_inner(const LatticeForm& u, const LatticeForm& v);

/// A^{(0,1)} ↦ g A^{(0,1)} g⁻¹ + g ∂̄(g⁻¹),  Φ ↦ g Φ g⁻¹.
Configuration gauge_transform(const Configuration& c, const GaugeElement& g);

/// X_ζ = (-(dζ - [ζ,A]), [ζ,Φ]). The (1,0) part of X₁ computed directly is
/// checked against -(X₁^{(0,1)})*; a mismatch throws ConsistencyError.
TangentVector gauge_vector_field(const Configuration& c, const GaugeAlgebraField& zeta);

/// ∂̄γ^{(1,0)} + [α^{(0,1)}, Φ] + [A^{(0,1)}, γ^{(1,0)}].
LatticeForm linearized_eq2(const Configuration& c, const TangentVector& x);

/// dβ + [β, A] with β the full tangent 1-form of x.
LatticeForm linearized_curvature(const Configuration& c, const TangentVector& x);

}  // namespace hitchin
