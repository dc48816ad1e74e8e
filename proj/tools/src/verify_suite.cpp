#include "hitchin/kahler_geometry.hpp"
#include "hitchin/moment_map.hpp"
#include "hitchin/quillen_curvature.hpp"
#include "hitchin_lab/commands.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace hitchin::lab {

namespace {

double max_gap(const LatticeForm& a, const LatticeForm& b) { return (a - b).max_abs(); }

IdentityReport metric_report(const TangentVector& x, const TangentVector& y) {
  IdentityReport r;
  r.identity_name = "metric_equivalence";
  const double gxx = metric_g(x, x);
  const double hxx = metric_hitchin(x, x);
  const double gxy = metric_g(x, y);
  const double hxy = metric_hitchin(x, y);
  r.add_value("g_XX", gxx);
  r.add_value("g1_XX", hxx);
  r.add_value("g_XY", gxy);
  r.add_value("g1_XY", hxy);
  r.add_discrepancy("diagonal", std::abs(gxx - hxx) / (1.0 + std::abs(gxx)), 1e-11);
  r.add_discrepancy("polarized", relative_discrepancy(gxy, hxy), 1e-11);
  return r;
}

IdentityReport omega_report(const TangentVector& x, const TangentVector& y) {
  IdentityReport r;
  r.identity_name = "omega_consistency";
  const double forms = omega_forms(x, y).value.real();
  const double via_metric = metric_g(x, complex_structure(y));
  const double reversed = metric_g(y, complex_structure(x));
  const double rotated = metric_g(complex_structure(x), complex_structure(complex_structure(y)));
  r.add_value("omega_forms", forms);
  r.add_value("g_X_IY", via_metric);
  r.add_value("omega_YX", reversed);
  r.add_value("omega_IX_IY", rotated);
  r.add_discrepancy("two_routes", std::abs(forms - via_metric) / (1.0 + std::abs(forms)), 1e-10);
  r.add_discrepancy("antisymmetry", std::abs(via_metric + reversed) / (1.0 + std::abs(via_metric)), 1e-11);
  r.add_discrepancy("I_invariance", std::abs(rotated - via_metric) / (1.0 + std::abs(via_metric)), 1e-11);
  return r;
}

IdentityReport sign_table_report(const TangentVector& x) {
  IdentityReport r;
  r.identity_name = "complex_structure_signs";
  const TangentVector ix = complex_structure(x);
  r.add_discrepancy("alpha01", max_gap(ix.alpha01(), kI * x.alpha01()), 0.0);
  r.add_discrepancy("gamma10", max_gap(ix.gamma10(), kI * x.gamma10()), 0.0);
  r.add_discrepancy("alpha10", max_gap(ix.alpha10(), -kI * x.alpha10()), 0.0);
  r.add_discrepancy("gamma01", max_gap(ix.gamma01(), -kI * x.gamma01()), 0.0);
  return r;
}

IdentityReport trace_lemma_report(const Configuration& c, const TangentVector& x, const TangentVector& y,
                                  const GaugeAlgebraField& zeta) {
  IdentityReport r;
  r.identity_name = "trace_lemmas";
  double re_gap = 0.0;
  double im_gap = 0.0;
  double higgs_gap = 0.0;
  for (int s = 0; s < c.grid().site_count(); ++s) {
    const Matrix a = x.alpha01().at(s);
    const Matrix b = y.alpha01().at(s);
    const Complex ab = (a * b.adjoint()).trace();
    const Complex ba = (b * a.adjoint()).trace();
    const double scale = 1.0 + a.norm() * b.norm();
    re_gap = std::max(re_gap, std::abs(ab.real() - ba.real()) / scale);
    im_gap = std::max(im_gap, std::abs(ab.imag() + ba.imag()) / scale);
    const Matrix z = zeta.field().at(s);
    const Matrix phi = c.phi10().at(s);
    const Matrix e = y.gamma10().at(s);
    higgs_gap = std::max(higgs_gap, higgs_trace_lemma_defect(z, phi, e) / (1.0 + z.norm() * phi.norm() * e.norm()));
  }
  r.add_discrepancy("re_trace_symmetric", re_gap, 1e-14);
  r.add_discrepancy("im_trace_antisymmetric", im_gap, 1e-14);
  r.add_discrepancy("higgs_bracket_trace", higgs_gap, 1e-13);
  return r;
}

}  // namespace

std::vector<IdentityReport> verify_trial(const GridSettings& settings, int trial) {
  const SurfaceGrid grid(settings.side_count, settings.side_length);
  const int n = settings.rank;
  const std::uint64_t base = derive_seed(settings.seed, static_cast<std::uint64_t>(trial));
  const Configuration c = random_configuration(grid, n, derive_seed(base, 1));
  const TangentVector x = random_tangent(grid, n, derive_seed(base, 2));
  const TangentVector y = random_tangent(grid, n, derive_seed(base, 3));
  const GaugeAlgebraField zeta = random_skew_hermitian(grid, n, derive_seed(base, 4), 2);

  std::vector<IdentityReport> out;
  out.push_back(metric_report(x, y));
  out.push_back(omega_report(x, y));
  out.push_back(verify_hamiltonian_identity(c, zeta, y));
  out.push_back(slice_pairing_checks(c, x, zeta));
  out.push_back(prequantum_check(x, y));
  out.push_back(sign_table_report(x));
  out.push_back(trace_lemma_report(c, x, y, zeta));

  const std::string digest = make_digest(settings.seed, trial, settings.side_count, n);
  for (auto& r : out) r.inputs_digest = digest;
  return out;
}

std::vector<IdentityReport> run_verify_suite(const GridSettings& grid, const VerifySettings& verify, int threads) {
  const int trials = verify.trials;
  std::vector<std::vector<IdentityReport>> per_trial(trials);
  std::vector<std::exception_ptr> errors(trials);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t = next++; t < trials; t = next++) {
      try {
        per_trial[t] = verify_trial(grid, t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  const int workers = std::clamp(threads, 1, trials);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<IdentityReport> out;
  for (auto& batch : per_trial) {
    for (auto& r : batch) {
      if (verify.tolerance) r.override_tolerance(*verify.tolerance);
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace hitchin::lab
