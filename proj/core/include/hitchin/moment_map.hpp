#pragma once

// Moment map for the gauge action, the Hamiltonians it generates, and the
// checks that the gauge vector fields are Hamiltonian for Ω.

#include "hitchin/hitchin_config.hpp"
#include "hitchin/identity_report.hpp"
#include "hitchin/kahler_geometry.hpp"

namespace hitchin {

struct MomentValue {
  /// dz∧dz̄ coefficient is Hermitian, so the dx∧dy part is skew-Hermitian.
  LatticeForm field;
};

/// μ = F(A) + [Φ, Φ*]. Throws ConsistencyError on a skewness defect above
/// 1e-10·(1 + max|μ|).
MomentValue moment(const Configuration& c);

struct HamiltonianValue {
  double total = 0.0;
  /// h_ζ = Tr∫ F(A) ζ.
  double curvature_part = 0.0;
  /// f_ζ = Tr∫ [Φ,Φ*] ζ.
  double higgs_part = 0.0;
};

/// H_ζ = Tr∫ μ ζ. Throws ConsistencyError if any part has an imaginary
/// component above 1e-10·(1 + |part|).
HamiltonianValue hamiltonian(const Configuration& c, const GaugeAlgebraField& zeta);

struct IdentitySides {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Tr∫ ζ(dβ + [β,A])  and  Tr∫ X₁∧β.  Throws IdentityViolation when they
/// differ by more than 1e-10 relative.
IdentitySides dh_curvature(const Configuration& c, const GaugeAlgebraField& zeta,
                           const TangentVector& y);

/// Tr∫ ([δ,Φ*] + [Φ,δ*]) ζ  and  2 Re Tr∫ X₂∧δ*.  Same error contract.
IdentitySides df_higgs(const Configuration& c, const GaugeAlgebraField& zeta,
                       const TangentVector& y);

/// Single-site algebra behind df_higgs:
///   Im Tr([ζ,φ] e*) = Tr([φ,e*]ζ + [e,φ*]ζ) / 2i   for ζ* = -ζ.
/// Returns the modulus of the difference of the two sides.
double higgs_trace_lemma_defect(const Matrix& zeta, const Matrix& phi, const Matrix& e);

/// dH_ζ(Y) three ways: analytic assembly, central finite difference of H
/// with step `epsilon`, and Ω(X_ζ, Y). Pass iff analytic vs Ω ≤ 1e-10 and
/// finite difference vs Ω ≤ 1e-5 (relative).
IdentityReport verify_hamiltonian_identity(const Configuration& c, const GaugeAlgebraField& zeta,
                                           const TangentVector& y, double epsilon = 1e-4);

/// dμ(X) = dα + [α,A] + [γ,Φ*] + [Φ,γ*].
LatticeForm dmoment(const Configuration& c, const TangentVector& x);

/// The pairing chain behind orbit orthogonality:
///   g(X_ζ, X)  = -Ω(X_ζ, 𝓘X) = -Tr∫ ζ dμ(𝓘X)
///   g(X_ζ, 𝓘X) =  Ω(X_ζ, X)  =  Tr∫ ζ dμ(X)
/// Each equality must hold to 1e-10 relative.
IdentityReport slice_pairing_checks(const Configuration& c, const TangentVector& x,
                                    const GaugeAlgebraField& zeta);

}  // namespace hitchin
