#pragma once

// u(n) / gl(n,C) algebra lifted to lattice forms.

#include "hitchin/lattice_surface.hpp"

#include <cstdint>
#include <random>

namespace hitchin {

/// Seeded stream of doubles. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; the uniform/normal transforms are
/// written out here so the stream does not depend on the library vendor.
///   uniform(): top 53 bits of one engine draw, scaled to [0, 1).
///   normal():  Box–Muller on two uniforms, cosine branch only.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();
  double normal();
  Complex complex_normal();
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Mix a base seed with a stream index (splitmix64 finalizer), so trial i of
/// a suite gets an independent, reproducible stream.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// A 0-form valued in u(n): skew-Hermitian at every site.
class GaugeAlgebraField {
 public:
  /// Throws DomainError unless `field` is a 0-form with ζ* = -ζ to 1e-14 entrywise.
  explicit GaugeAlgebraField(LatticeForm field);

  static GaugeAlgebraField zero(const SurfaceGrid& grid, int rank);
  static GaugeAlgebraField constant(const SurfaceGrid& grid, const Matrix& value);

  const LatticeForm& field() const noexcept { return field_; }
  const SurfaceGrid& grid() const noexcept { return field_.grid(); }
  int rank() const noexcept { return field_.rank(); }

  GaugeAlgebraField& operator*=(double factor);
  GaugeAlgebraField& operator+=(const GaugeAlgebraField& other);

 private:
  LatticeForm field_;
};

/// A U(n)-valued lattice field.
class GaugeElement {
 public:
  /// Throws DomainError unless g*g = Id to 1e-12 at every site.
  explicit GaugeElement(LatticeForm field);

  static GaugeElement identity(const SurfaceGrid& grid, int rank);
  static GaugeElement constant(const SurfaceGrid& grid, const Matrix& value);

  const LatticeForm& field() const noexcept { return field_; }
  const SurfaceGrid& grid() const noexcept { return field_.grid(); }
  int rank() const noexcept { return field_.rank(); }

  /// g⁻¹ = g* sitewise.
  LatticeForm inverse() const;

 private:
  LatticeForm field_;
};

/// Largest entrywise |ζ* + ζ| over all sites.
double skew_hermitian_defect(const LatticeForm& field);
/// Largest entrywise |c - c*|; a 2-form whose dz∧dz̄ coefficient is Hermitian
/// has a skew-Hermitian dx∧dy component.
double hermitian_defect(const LatticeForm& field);
double unitarity_defect(const LatticeForm& field);

/// Graded commutator [u,v] = u∧v - (-1)^{pq} v∧u.
LatticeForm form_commutator(const LatticeForm& u, const LatticeForm& v);
LatticeForm form_commutator(const OneForm& u, const OneForm& v);
OneForm form_commutator(const LatticeForm& f, const OneForm& w);

/// Conjugate transpose of the coefficient with dz ↔ dz̄, e.g. φ dz ↦ φ* dz̄.
LatticeForm conj_transpose_form(const LatticeForm& w);

/// Sitewise conjugate transpose of a 0-form.
LatticeForm adjoint(const LatticeForm& f);

/// Tr ∫ w for a 2-form.
Complex trace_integrate(const LatticeForm& two_form);

/// Random matrix-valued form. bandwidth <= 0 draws independent complex
/// normal entries per site; bandwidth >= 1 superposes Fourier modes with
/// |kx|, |ky| <= bandwidth and random complex matrix amplitudes, giving a
/// smooth field. The result is scaled so its largest entry has modulus
/// `amplitude`.
LatticeForm random_form(const SurfaceGrid& grid, FormDegree degree, int rank, std::uint64_t seed,
                        int bandwidth = 0, double amplitude = 1.0);

/// Deterministic skew-Hermitian field; ζ = (M - M*)/2 from random_form.
GaugeAlgebraField random_skew_hermitian(const SurfaceGrid& grid, int rank, std::uint64_t seed,
                                        int bandwidth = 0, double amplitude = 1.0);

/// Sitewise matrix exponential g = exp(εζ).
GaugeElement exponentiate(const GaugeAlgebraField& zeta, double epsilon);

/// Dense matrix exponential and principal logarithm (scaling-and-squaring
/// Padé and inverse scaling-and-squaring, from Eigen's MatrixFunctions).
Matrix matrix_exp(const Matrix& m);
Matrix matrix_log(const Matrix& m);

}  // namespace hitchin
