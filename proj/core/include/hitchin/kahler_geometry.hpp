#pragma once

// Metric, almost complex structure and symplectic form on the tangent space
// of the configuration space.

#include "hitchin/hitchin_config.hpp"

namespace hitchin {

struct PairingValue {
  Complex value;
  /// |Im value| for quantities that must be real.
  double realness_defect = 0.0;
};

/// -Tr∫(α ∧ *₁β) - 2 Im Tr∫(γ^{(1,0)} ∧ *₂ δ^{(1,0)T}), evaluated literally
/// from the forms. The returned value keeps the imaginary part of the first
/// term for inspection.
PairingValue metric_g_pairing(const TangentVector& x, const TangentVector& y);

/// Real part of metric_g_pairing. Throws ConsistencyError when the realness
/// defect exceeds 1e-10·(1 + |g|).
double metric_g(const TangentVector& x, const TangentVector& y);

/// Symmetric polarization of the diagonal form
///   i Tr∫(α^{(0,1)*}∧β^{(0,1)} + β^{(0,1)*}∧α^{(0,1)})
///     + i Tr∫(γ^{(1,0)}∧δ^{(1,0)*} + δ^{(1,0)}∧γ^{(1,0)*}).
PairingValue metric_hitchin_pairing(const TangentVector& x, const TangentVector& y);
double metric_hitchin(const TangentVector& x, const TangentVector& y);

/// 𝓘 = diag(*₁, i): α^{(0,1)} ↦ iα^{(0,1)}, γ^{(1,0)} ↦ iγ^{(1,0)}.
TangentVector complex_structure(const TangentVector& x);

/// Tr∫(α∧β) - Tr∫(γ∧δ) on the full real 1-forms.
PairingValue omega_forms(const TangentVector& x, const TangentVector& y);

/// Ω(X,Y) = g(X, 𝓘Y), cross-checked against omega_forms; a disagreement
/// beyond 1e-10·(1 + |Ω|) throws ConsistencyError.
double omega(const TangentVector& x, const TangentVector& y);

/// |Im Tr(c c*)| for a single matrix.
double trace_realness_defect(const Matrix& c);

}  // namespace hitchin
