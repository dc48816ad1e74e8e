#include "hitchin/flow_solver.hpp"

#include "hitchin/errors.hpp"
#include "hitchin/kahler_geometry.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>

namespace hitchin {

namespace {

std::string format_double(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return {buffer, result.ptr};
}

struct Evaluation {
  LatticeForm r1;
  LatticeForm r2;
  double energy;
  double r1_norm;
  double r2_norm;
};

Evaluation evaluate(const Configuration& c) {
  auto [r1, r2] = selfduality_residuals(c);
  const double n1 = l2_norm(r1);
  const double n2 = l2_norm(r2);
  return {std::move(r1), std::move(r2), n1 * n1 + n2 * n2, n1, n2};
}

LatticeForm as_degree(const LatticeForm& w, FormDegree degree) {
  LatticeForm out(w.grid(), degree, w.rank());
  std::copy(w.values().begin(), w.values().end(), out.values().begin());
  return out;
}

TangentVector gradient_from_residuals(const Configuration& c, const LatticeForm& r1, const LatticeForm& r2) {
  const SurfaceGrid& grid = c.grid();
  const int n = c.rank();
  // Coefficient-level adjoints under ⟨u,v⟩ = h² Σ Re Tr(u v*):
  //   (M Y N)† r = M* r N*,  (M Y* N)† r = N r* M,  ∂_b† = -∂̄_f,  ∂̄_b† = -∂_f.
  const LatticeForm r1c = as_degree(r1, FormDegree::Zero);
  const LatticeForm r2c = as_degree(r2, FormDegree::Zero);
  const LatticeForm dbar_r1 = dbar_forward(r1c);
  const LatticeForm del_r1 = del_forward(r1c);
  const LatticeForm del_r2 = del_backward(r2c);

  LatticeForm a(grid, FormDegree::ZeroOne, n);
  LatticeForm p(grid, FormDegree::OneZero, n);
  for (int s = 0; s < grid.site_count(); ++s) {
    const auto A = c.a01().at(s);
    const auto phi = c.phi10().at(s);
    const Matrix Ad = A.adjoint();
    const Matrix phid = phi.adjoint();
    const auto u = r1.at(s);
    const auto v = r2.at(s);
    const Matrix ud = u.adjoint();

    a.at(s) = -dbar_r1.at(s) - del_r1.at(s).adjoint() - A * ud + u * A - A * u + ud * A + phid * v -
              v * phid;
    p.at(s) = u * phi - phi * u + ud * phi - phi * ud + del_r2.at(s) + v * Ad - Ad * v;
  }
  // grad_T = 2 Σ L†r and g = 4 ⟨·,·⟩_T, so grad_g = grad_T / 4.
  a *= 0.5;
  p *= 0.5;
  return {std::move(a), std::move(p)};
}

}  // namespace

void FlowParams::validate() const {
  if (!(step_size > 0.0) || !std::isfinite(step_size)) throw DomainError("FlowParams: step_size must be > 0");
  if (!(backtrack > 0.0 && backtrack < 1.0)) throw DomainError("FlowParams: backtrack must lie in (0,1)");
  if (!(growth > 1.0) || !std::isfinite(growth)) throw DomainError("FlowParams: growth must be > 1");
  if (max_iters < 0) throw DomainError("FlowParams: max_iters must be >= 0");
  if (!(target_residual > 0.0)) throw DomainError("FlowParams: target_residual must be > 0");
  if (!(armijo > 0.0 && armijo < 1.0)) throw DomainError("FlowParams: armijo must lie in (0,1)");
}

const char* to_string(FlowStatus status) noexcept {
  switch (status) {
    case FlowStatus::Converged: return "converged";
    case FlowStatus::MaxIterations: return "max_iters";
    case FlowStatus::Stagnated: return "stagnated";
  }
  return "unknown";
}

void FlowTrace::write_csv(std::ostream& out, bool header) const {
  if (header) out << "iter,energy,r1_norm,r2_norm,step\n";
  for (const auto& r : records) {
    out << r.iter << ',' << format_double(r.energy) << ',' << format_double(r.r1_norm) << ','
        << format_double(r.r2_norm) << ',' << format_double(r.step) << '\n';
  }
}

std::string FlowTrace::status_json() const {
  nlohmann::ordered_json j;
  j["status"] = to_string(status);
  if (!records.empty()) {
    const auto& r = records.back();
    j["iterations"] = r.iter;
    j["energy"] = r.energy;
    j["r1_norm"] = r.r1_norm;
    j["r2_norm"] = r.r2_norm;
    j["step"] = r.step;
  }
  return j.dump();
}

double energy(const Configuration& c) { return evaluate(c).energy; }

TangentVector energy_gradient(const Configuration& c) {
  const auto [r1, r2] = selfduality_residuals(c);
  return gradient_from_residuals(c, r1, r2);
}

FlowResult gradient_flow(const Configuration& c0, const FlowParams& params, long iteration_offset) {
  params.validate();
  FlowResult result{c0, {}, params.step_size};
  Evaluation current = evaluate(c0);
  long iter = iteration_offset;
  result.trace.records.push_back({iter, current.energy, current.r1_norm, current.r2_norm, 0.0});

  double step = params.step_size;
  std::optional<TangentVector> pending;
  for (long k = 0;; ++k) {
    if (std::max(current.r1_norm, current.r2_norm) <= params.target_residual) {
      result.trace.status = FlowStatus::Converged;
      break;
    }
    if (k >= params.max_iters) {
      result.trace.status = FlowStatus::MaxIterations;
      break;
    }
    if (!pending) pending = gradient_from_residuals(result.configuration, current.r1, current.r2);
    const TangentVector grad = std::move(*pending);
    pending.reset();
    const double slope = metric_g(grad, grad);

    bool accepted = false;
    while (step >= 1e-16) {
      Configuration trial = displace(result.configuration, grad, -step);
      Evaluation next = evaluate(trial);
      if (next.energy <= current.energy - params.armijo * step * slope && next.energy < current.energy) {
        result.configuration = std::move(trial);
        current = std::move(next);
        accepted = true;
        break;
      }
      step *= params.backtrack;
    }
    if (!accepted) {
      result.trace.status = FlowStatus::Stagnated;
      break;
    }
    ++iter;
    result.trace.records.push_back({iter, current.energy, current.r1_norm, current.r2_norm, step});

    // Next trial step: Barzilai–Borwein s·s/s·y when the curvature estimate is
    // positive, else grow the accepted step. Backtracking keeps descent monotone.
    if (params.bb_steps) {
      const TangentVector next_grad = gradient_from_residuals(result.configuration, current.r1, current.r2);
      const TangentVector s = (-step) * grad;
      const TangentVector y = next_grad - grad;
      const double sy = metric_g(s, y);
      const double trial = sy > 0.0 ? metric_g(s, s) / sy : 0.0;
      step = (trial > 0.0 && std::isfinite(trial)) ? trial : step * params.growth;
      pending = next_grad;
    } else {
      step *= params.growth;
    }
  }
  result.next_step = step;
  return result;
}

Configuration seed_solution(const SurfaceGrid& grid, int rank, Complex value) {
  if (rank != 1) throw DomainError("seed_solution: exact seed exists only for rank 1");
  return {LatticeForm(grid, FormDegree::ZeroOne, 1),
          LatticeForm::constant(grid, FormDegree::OneZero, Matrix::Constant(1, 1, value))};
}

}  // namespace hitchin
