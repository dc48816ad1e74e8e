#pragma once

// Periodic square lattice standing in for the Riemann surface, plus the
// matrix-valued differential forms that live on it.
//
// Conventions used throughout the library:
//   z = x + i y,  dz = dx + i dy,  dz∧dz̄ = -2i dx∧dy.
//   A 2-form is stored by its dz∧dz̄ coefficient.
//   0-forms are differentiated with forward differences; 1-forms with
//   backward differences. The two stencils are negative transposes of each
//   other, so  Σ Tr(f · d w) = -Σ Tr(d f ∧ w)  holds to rounding.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hitchin {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using MatrixMap = Eigen::Map<Matrix>;
using ConstMatrixMap = Eigen::Map<const Matrix>;

inline constexpr Complex kI{0.0, 1.0};

class SurfaceGrid {
 public:
  /// Throws DomainError unless side_count >= 2 and side_length > 0.
  SurfaceGrid(int side_count, double side_length);

  int side_count() const noexcept { return side_count_; }
  double side_length() const noexcept { return side_length_; }
  double spacing() const noexcept { return side_length_ / side_count_; }
  int site_count() const noexcept { return side_count_ * side_count_; }

  /// Linear site index of (j, k) with periodic wrap; j runs along x, k along y.
  /// Sites are ordered row-major with k as the row: s = k * N + j.
  int site(int j, int k) const noexcept;
  int column(int s) const noexcept { return s % side_count_; }
  int row(int s) const noexcept { return s / side_count_; }
  int shifted(int s, int dj, int dk) const noexcept {
    return site(column(s) + dj, row(s) + dk);
  }

  Complex coordinate(int j, int k) const noexcept {
    return {j * spacing(), k * spacing()};
  }

  friend bool operator==(const SurfaceGrid&, const SurfaceGrid&) = default;

 private:
  int side_count_;
  double side_length_;
};

SurfaceGrid make_torus_grid(int side_count, double side_length);

enum class FormDegree { Zero, OneZero, ZeroOne, Two };

const char* to_string(FormDegree degree) noexcept;
int form_order(FormDegree degree) noexcept;

/// One n×n complex coefficient per site. The coefficient is the bare value
/// for 0-forms, the factor of dz, dz̄ for pure 1-forms, and the factor of
/// dz∧dz̄ for 2-forms.
class LatticeForm {
 public:
  LatticeForm(const SurfaceGrid& grid, FormDegree degree, int rank);

  static LatticeForm constant(const SurfaceGrid& grid, FormDegree degree, const Matrix& value);

  const SurfaceGrid& grid() const noexcept { return grid_; }
  FormDegree degree() const noexcept { return degree_; }
  int rank() const noexcept { return rank_; }
  int site_count() const noexcept { return grid_.site_count(); }

  MatrixMap at(int s) noexcept { return {data_.data() + offset(s), rank_, rank_}; }
  ConstMatrixMap at(int s) const noexcept { return {data_.data() + offset(s), rank_, rank_}; }

  std::span<Complex> values() noexcept { return data_; }
  std::span<const Complex> values() const noexcept { return data_; }

  LatticeForm& operator+=(const LatticeForm& other);
  LatticeForm& operator-=(const LatticeForm& other);
  LatticeForm& operator*=(Complex factor);

  /// Same grid, degree and rank; throws DomainError otherwise.
  void require_compatible(const LatticeForm& other) const;

  double max_abs() const noexcept;
  /// Plain Euclidean norm of all coefficients (no area weight).
  double coefficient_norm() const noexcept;

 private:
  std::size_t offset(int s) const noexcept {
    return static_cast<std::size_t>(s) * static_cast<std::size_t>(rank_ * rank_);
  }

  SurfaceGrid grid_;
  FormDegree degree_;
  int rank_;
  std::vector<Complex> data_;
};

LatticeForm operator+(LatticeForm lhs, const LatticeForm& rhs);
LatticeForm operator-(LatticeForm lhs, const LatticeForm& rhs);
LatticeForm operator*(Complex factor, LatticeForm form);
LatticeForm operator-(LatticeForm form);

/// A general 1-form: ordered pair (dz part, dz̄ part) of pure forms.
struct OneForm {
  LatticeForm dz;
  LatticeForm dzbar;

  OneForm(LatticeForm dz_part, LatticeForm dzbar_part);
  static OneForm zero(const SurfaceGrid& grid, int rank);

  const SurfaceGrid& grid() const noexcept { return dz.grid(); }
  int rank() const noexcept { return dz.rank(); }

  OneForm& operator+=(const OneForm& other);
  OneForm& operator-=(const OneForm& other);
  OneForm& operator*=(Complex factor);
};

OneForm operator+(OneForm lhs, const OneForm& rhs);
OneForm operator-(OneForm lhs, const OneForm& rhs);
OneForm operator*(Complex factor, OneForm form);

// --- finite differences ------------------------------------------------------

enum class Axis { X, Y };

/// (f(s + e) - f(s)) / h, any degree.
LatticeForm forward_difference(const LatticeForm& f, Axis axis);
/// (f(s) - f(s - e)) / h, any degree.
LatticeForm backward_difference(const LatticeForm& f, Axis axis);

/// Coefficient-level Wirtinger stencils (degree is preserved).
/// del = (∂x - i∂y)/2, dbar = (∂x + i∂y)/2.
LatticeForm del_forward(const LatticeForm& f);
LatticeForm dbar_forward(const LatticeForm& f);
LatticeForm del_backward(const LatticeForm& f);
LatticeForm dbar_backward(const LatticeForm& f);

// --- exterior calculus -------------------------------------------------------

/// ∂f as a (1,0)-form. f must be a 0-form.
LatticeForm del(const LatticeForm& f);
/// ∂̄f as a (0,1)-form. f must be a 0-form.
LatticeForm dbar(const LatticeForm& f);
/// df = ∂f + ∂̄f. f must be a 0-form.
OneForm d(const LatticeForm& f);
/// Exterior derivative of a 1-form, returned as a 2-form:
///   d(η dz + θ dz̄) = (∂θ - ∂̄η) dz∧dz̄   (backward stencils).
LatticeForm d(const OneForm& w);
/// Exterior derivative of a pure 1-form.
LatticeForm d1(const LatticeForm& w);

/// Pointwise wedge with dz∧dz = dz̄∧dz̄ = 0 and dz̄∧dz = -dz∧dz̄.
/// A (1,0)∧(1,0) product yields the zero 2-form.
LatticeForm wedge(const LatticeForm& u, const LatticeForm& v);
LatticeForm wedge(const OneForm& u, const OneForm& v);
OneForm wedge(const LatticeForm& f, const OneForm& w);
OneForm wedge(const OneForm& w, const LatticeForm& f);

/// Σ_sites c(s) · (-2i) h². Matrix valued; compose with a trace for scalars.
Matrix integrate(const LatticeForm& two_form);

/// *₁: η dz ↦ -iη dz,  η dz̄ ↦ iη dz̄.
LatticeForm hodge1(const LatticeForm& w);
OneForm hodge1(const OneForm& w);
/// *₂ (conjugate linear): η dz ↦ η̄ dz̄,  η dz̄ ↦ -η̄ dz.  η̄ is entrywise.
LatticeForm hodge2(const LatticeForm& w);
OneForm hodge2(const OneForm& w);

/// Entrywise transpose of every coefficient (no conjugation).
LatticeForm transpose_entries(const LatticeForm& w);
/// Entrywise complex conjugate of every coefficient; basis dz ↔ dz̄ is
/// swapped for 1-forms, as for the conjugate of a complex form.
LatticeForm conjugate_form(const LatticeForm& w);

}  // namespace hitchin
