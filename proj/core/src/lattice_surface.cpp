#include "hitchin/lattice_surface.hpp"

#include "hitchin/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hitchin {

SurfaceGrid::SurfaceGrid(int side_count, double side_length)
    : side_count_(side_count), side_length_(side_length) {
  if (side_count < 2) {
    throw DomainError("SurfaceGrid: side_count must be >= 2, got " + std::to_string(side_count));
  }
  if (!(side_length > 0.0) || !std::isfinite(side_length)) {
    throw DomainError("SurfaceGrid: side_length must be positive and finite");
  }
}

int SurfaceGrid::site(int j, int k) const noexcept {
  const int n = side_count_;
  j %= n;
  k %= n;
  if (j < 0) j += n;
  if (k < 0) k += n;
  return k * n + j;
}

SurfaceGrid make_torus_grid(int side_count, double side_length) {
  return SurfaceGrid(side_count, side_length);
}

const char* to_string(FormDegree degree) noexcept {
  switch (degree) {
    case FormDegree::Zero: return "0";
    case FormDegree::OneZero: return "(1,0)";
    case FormDegree::ZeroOne: return "(0,1)";
    case FormDegree::Two: return "2";
  }
  return "?";
}

int form_order(FormDegree degree) noexcept {
  switch (degree) {
    case FormDegree::Zero: return 0;
    case FormDegree::OneZero:
    case FormDegree::ZeroOne: return 1;
    case FormDegree::Two: return 2;
  }
  return -1;
}

// --- LatticeForm -------------------------------------------------------------

LatticeForm::LatticeForm(const SurfaceGrid& grid, FormDegree degree, int rank)
    : grid_(grid), degree_(degree), rank_(rank) {
  if (rank < 1) throw DomainError("LatticeForm: rank must be >= 1");
  data_.assign(static_cast<std::size_t>(grid.site_count()) * rank * rank, Complex{});
}

LatticeForm LatticeForm::constant(const SurfaceGrid& grid, FormDegree degree, const Matrix& value) {
  if (value.rows() != value.cols()) throw DomainError("LatticeForm::constant: square matrix required");
  LatticeForm out(grid, degree, static_cast<int>(value.rows()));
  for (int s = 0; s < grid.site_count(); ++s) out.at(s) = value;
  return out;
}

void LatticeForm::require_compatible(const LatticeForm& other) const {
  if (!(grid_ == other.grid_)) throw DomainError("LatticeForm: grid mismatch");
  if (rank_ != other.rank_) throw DomainError("LatticeForm: rank mismatch");
  if (degree_ != other.degree_) {
    throw DomainError(std::string("LatticeForm: degree mismatch ") + to_string(degree_) + " vs " +
                      to_string(other.degree_));
  }
}

LatticeForm& LatticeForm::operator+=(const LatticeForm& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

LatticeForm& LatticeForm::operator-=(const LatticeForm& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

LatticeForm& LatticeForm::operator*=(Complex factor) {
  for (auto& v : data_) v *= factor;
  return *this;
}

double LatticeForm::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double LatticeForm::coefficient_norm() const noexcept {
  double sum = 0.0;
  for (const auto& v : data_) sum += std::norm(v);
  return std::sqrt(sum);
}

LatticeForm operator+(LatticeForm lhs, const LatticeForm& rhs) { return lhs += rhs; }
LatticeForm operator-(LatticeForm lhs, const LatticeForm& rhs) { return lhs -= rhs; }
LatticeForm operator*(Complex factor, LatticeForm form) { return form *= factor; }
LatticeForm operator-(LatticeForm form) { return form *= -1.0; }

// --- OneForm -----------------------------------------------------------------

OneForm::OneForm(LatticeForm dz_part, LatticeForm dzbar_part)
    : dz(std::move(dz_part)), dzbar(std::move(dzbar_part)) {
  if (dz.degree() != FormDegree::OneZero || dzbar.degree() != FormDegree::ZeroOne) {
    throw DomainError("OneForm: expects a (1,0) part and a (0,1) part");
  }
  if (!(dz.grid() == dzbar.grid()) || dz.rank() != dzbar.rank()) {
    throw DomainError("OneForm: parts live on different grids or ranks");
  }
}

OneForm OneForm::zero(const SurfaceGrid& grid, int rank) {
  return {LatticeForm(grid, FormDegree::OneZero, rank), LatticeForm(grid, FormDegree::ZeroOne, rank)};
}

OneForm& OneForm::operator+=(const OneForm& other) {
  dz += other.dz;
  dzbar += other.dzbar;
  return *this;
}

OneForm& OneForm::operator-=(const OneForm& other) {
  dz -= other.dz;
  dzbar -= other.dzbar;
  return *this;
}

OneForm& OneForm::operator*=(Complex factor) {
  dz *= factor;
  dzbar *= factor;
  return *this;
}

OneForm operator+(OneForm lhs, const OneForm& rhs) { return lhs += rhs; }
OneForm operator-(OneForm lhs, const OneForm& rhs) { return lhs -= rhs; }
OneForm operator*(Complex factor, OneForm form) { return form *= factor; }

// --- stencils ----------------------------------------------------------------

namespace {

LatticeForm with_degree(const LatticeForm& like, FormDegree degree) {
  return LatticeForm(like.grid(), degree, like.rank());
}

// out(s) = (a·f(s + step) + b·f(s)) scaled, step = ±1 along the axis.
LatticeForm difference(const LatticeForm& f, Axis axis, int step) {
  LatticeForm out = with_degree(f, f.degree());
  const SurfaceGrid& g = f.grid();
  const double inv_h = 1.0 / g.spacing();
  const int dj = axis == Axis::X ? step : 0;
  const int dk = axis == Axis::Y ? step : 0;
  for (int s = 0; s < g.site_count(); ++s) {
    const int t = g.shifted(s, dj, dk);
    if (step > 0) {
      out.at(s) = (f.at(t) - f.at(s)) * inv_h;
    } else {
      out.at(s) = (f.at(s) - f.at(t)) * inv_h;
    }
  }
  return out;
}

// (∂x + sign·i ∂y)/2 with the given difference direction.
LatticeForm wirtinger(const LatticeForm& f, int step, double sign) {
  LatticeForm dx = difference(f, Axis::X, step);
  const LatticeForm dy = difference(f, Axis::Y, step);
  const Complex c{0.0, 0.5 * sign};
  auto out = dx.values();
  auto in = dy.values();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = 0.5 * out[i] + c * in[i];
  return dx;
}

void require_degree(const LatticeForm& f, FormDegree degree, const char* op) {
  if (f.degree() != degree) {
    throw DomainError(std::string(op) + ": expected degree " + to_string(degree) + ", got " +
                      to_string(f.degree()));
  }
}

LatticeForm relabel(LatticeForm f, FormDegree degree) {
  LatticeForm out(f.grid(), degree, f.rank());
  std::copy(f.values().begin(), f.values().end(), out.values().begin());
  return out;
}

}  // namespace

LatticeForm forward_difference(const LatticeForm& f, Axis axis) { return difference(f, axis, +1); }
LatticeForm backward_difference(const LatticeForm& f, Axis axis) { return difference(f, axis, -1); }

LatticeForm del_forward(const LatticeForm& f) { return wirtinger(f, +1, -1.0); }
LatticeForm dbar_forward(const LatticeForm& f) { return wirtinger(f, +1, +1.0); }
LatticeForm del_backward(const LatticeForm& f) { return wirtinger(f, -1, -1.0); }
LatticeForm dbar_backward(const LatticeForm& f) { return wirtinger(f, -1, +1.0); }

LatticeForm del(const LatticeForm& f) {
  require_degree(f, FormDegree::Zero, "del");
  return relabel(del_forward(f), FormDegree::OneZero);
}

LatticeForm dbar(const LatticeForm& f) {
  require_degree(f, FormDegree::Zero, "dbar");
  return relabel(dbar_forward(f), FormDegree::ZeroOne);
}

OneForm d(const LatticeForm& f) { return {del(f), dbar(f)}; }

LatticeForm d1(const LatticeForm& w) {
  if (w.degree() == FormDegree::OneZero) {
    // d(η dz) = ∂̄η dz̄∧dz = -∂̄η dz∧dz̄
    return relabel(-dbar_backward(w), FormDegree::Two);
  }
  if (w.degree() == FormDegree::ZeroOne) {
    return relabel(del_backward(w), FormDegree::Two);
  }
  throw DomainError(std::string("d: 1-form required, got degree ") + to_string(w.degree()));
}

LatticeForm d(const OneForm& w) { return d1(w.dz) + d1(w.dzbar); }

// --- wedge -------------------------------------------------------------------

LatticeForm wedge(const LatticeForm& u, const LatticeForm& v) {
  if (!(u.grid() == v.grid())) throw DomainError("wedge: grid mismatch");
  if (u.rank() != v.rank()) throw DomainError("wedge: rank mismatch");
  const int pu = form_order(u.degree());
  const int pv = form_order(v.degree());
  if (pu + pv > 2) throw DomainError("wedge: resulting degree exceeds 2");

  FormDegree degree = FormDegree::Zero;
  double sign = 1.0;
  if (pu == 0) {
    degree = v.degree();
  } else if (pv == 0) {
    degree = u.degree();
  } else {
    degree = FormDegree::Two;
    if (u.degree() == v.degree()) return LatticeForm(u.grid(), FormDegree::Two, u.rank());
    if (u.degree() == FormDegree::ZeroOne) sign = -1.0;  // dz̄∧dz = -dz∧dz̄
  }

  LatticeForm out(u.grid(), degree, u.rank());
  for (int s = 0; s < u.site_count(); ++s) {
    out.at(s).noalias() = u.at(s) * v.at(s);
    if (sign < 0) out.at(s) *= -1.0;
  }
  return out;
}

LatticeForm wedge(const OneForm& u, const OneForm& v) {
  return wedge(u.dz, v.dzbar) + wedge(u.dzbar, v.dz);
}

OneForm wedge(const LatticeForm& f, const OneForm& w) { return {wedge(f, w.dz), wedge(f, w.dzbar)}; }
OneForm wedge(const OneForm& w, const LatticeForm& f) { return {wedge(w.dz, f), wedge(w.dzbar, f)}; }

Matrix integrate(const LatticeForm& two_form) {
  require_degree(two_form, FormDegree::Two, "integrate");
  const int n = two_form.rank();
  Matrix sum = Matrix::Zero(n, n);
  for (int s = 0; s < two_form.site_count(); ++s) sum += two_form.at(s);
  const double h = two_form.grid().spacing();
  return sum * (Complex{0.0, -2.0} * h * h);
}

// --- Hodge stars -------------------------------------------------------------

LatticeForm hodge1(const LatticeForm& w) {
  if (w.degree() == FormDegree::OneZero) return Complex{0.0, -1.0} * w;
  if (w.degree() == FormDegree::ZeroOne) return kI * w;
  throw DomainError(std::string("hodge1: 1-form required, got degree ") + to_string(w.degree()));
}

OneForm hodge1(const OneForm& w) { return {hodge1(w.dz), hodge1(w.dzbar)}; }

LatticeForm hodge2(const LatticeForm& w) {
  if (w.degree() == FormDegree::OneZero) {
    return conjugate_form(w);
  }
  if (w.degree() == FormDegree::ZeroOne) {
    return -conjugate_form(w);
  }
  throw DomainError(std::string("hodge2: 1-form required, got degree ") + to_string(w.degree()));
}

OneForm hodge2(const OneForm& w) {
  // *₂ swaps types: the dz part of the result comes from the dz̄ input.
  return {hodge2(w.dzbar), hodge2(w.dz)};
}

LatticeForm transpose_entries(const LatticeForm& w) {
  LatticeForm out(w.grid(), w.degree(), w.rank());
  for (int s = 0; s < w.site_count(); ++s) out.at(s) = w.at(s).transpose();
  return out;
}

LatticeForm conjugate_form(const LatticeForm& w) {
  FormDegree degree = w.degree();
  double sign = 1.0;
  switch (w.degree()) {
    case FormDegree::OneZero: degree = FormDegree::ZeroOne; break;
    case FormDegree::ZeroOne: degree = FormDegree::OneZero; break;
    case FormDegree::Two: sign = -1.0; break;  // conj(dz∧dz̄) = -dz∧dz̄
    case FormDegree::Zero: break;
  }
  LatticeForm out(w.grid(), degree, w.rank());
  auto src = w.values();
  auto dst = out.values();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = sign * std::conj(src[i]);
  return out;
}

}  // namespace hitchin
