// Acceptance run: one PASS/FAIL line per criterion. Tolerances and runtime
// limits are pinned here; `--criterion K` runs a single criterion.

#include "hitchin/flow_solver.hpp"
#include "hitchin/gauge_slice.hpp"
#include "hitchin/kahler_geometry.hpp"
#include "hitchin/moment_map.hpp"
#include "hitchin/quillen_curvature.hpp"
#include "hitchin_lab/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace hitchin;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[violated: " << what << "] ";
    }
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

const SurfaceGrid kGrid8(8, 1.0);
constexpr int kTrials = 100;

double scaled_gap(double a, double b) { return std::abs(a - b) / (1.0 + std::abs(a)); }

double value_of(const IdentityReport& r, const std::string& name) {
  for (const auto& v : r.values) {
    if (v.name == name) return v.value.real();
  }
  throw std::runtime_error("report " + r.identity_name + " lacks value " + name);
}

double discrepancy_of(const IdentityReport& r, const std::string& name) {
  for (const auto& d : r.discrepancies) {
    if (d.name == name) return d.value;
  }
  throw std::runtime_error("report " + r.identity_name + " lacks discrepancy " + name);
}

TangentVector sample_tangent(int n, int trial, int which) {
  return random_tangent(kGrid8, n, derive_seed(derive_seed(0xACCE55, n), 3 * trial + which));
}

// 1 -----------------------------------------------------------------------------
Outcome metric_equivalence() {
  Outcome out;
  Stopwatch clock;
  double worst = 0.0;
  for (int n : {1, 2, 3}) {
    for (int t = 0; t < kTrials; ++t) {
      const TangentVector x = sample_tangent(n, t, 0);
      const double g = metric_g(x, x);
      worst = std::max(worst, std::abs(g - metric_hitchin(x, x)) / (1.0 + std::abs(g)));
    }
  }
  const double elapsed = clock.seconds();
  out.require(worst <= 1e-11, "|g - g1| <= 1e-11 (1+|g|)");
  out.require(elapsed <= 10.0, "runtime <= 10 s");
  out.detail << "max scaled gap " << worst << " over " << 3 * kTrials << " samples, " << elapsed << " s";
  return out;
}

// 2 -----------------------------------------------------------------------------
Outcome symplectic_consistency() {
  Outcome out;
  double routes = 0.0, antisym = 0.0, invariance = 0.0;
  for (int n : {1, 2, 3}) {
    for (int t = 0; t < kTrials; ++t) {
      const TangentVector x = sample_tangent(n, t, 0);
      const TangentVector y = sample_tangent(n, t, 1);
      const double forms = omega_forms(x, y).value.real();
      const double via_metric = metric_g(x, complex_structure(y));
      const double reversed = metric_g(y, complex_structure(x));
      const double rotated = metric_g(complex_structure(x), complex_structure(complex_structure(y)));
      routes = std::max(routes, relative_discrepancy(forms, via_metric));
      antisym = std::max(antisym, scaled_gap(via_metric, -reversed));
      invariance = std::max(invariance, scaled_gap(via_metric, rotated));
    }
  }
  out.require(routes <= 1e-10, "two routes <= 1e-10");
  out.require(antisym <= 1e-11, "antisymmetry <= 1e-11");
  out.require(invariance <= 1e-11, "I-invariance <= 1e-11");
  out.detail << "routes " << routes << ", antisymmetry " << antisym << ", I-invariance " << invariance;
  return out;
}

// 3 -----------------------------------------------------------------------------
Outcome hamiltonian_identity() {
  Outcome out;
  double analytic = 0.0, fd = 0.0, curvature_pairing = 0.0, higgs_pairing = 0.0;
  for (int n : {1, 2, 3}) {
    for (int t = 0; t < kTrials; ++t) {
      const std::uint64_t base = derive_seed(derive_seed(0x4A11, n), t);
      const Configuration c = random_configuration(kGrid8, n, derive_seed(base, 1));
      const GaugeAlgebraField zeta = random_skew_hermitian(kGrid8, n, derive_seed(base, 2), 2);
      const TangentVector y = random_tangent(kGrid8, n, derive_seed(base, 3));
      const IdentityReport r = verify_hamiltonian_identity(c, zeta, y, 1e-4);
      analytic = std::max(analytic, discrepancy_of(r, "analytic_vs_omega"));
      fd = std::max(fd, discrepancy_of(r, "fd_vs_omega"));
      curvature_pairing =
          std::max(curvature_pairing, relative_discrepancy(value_of(r, "curvature_pairing_lhs"),
                                                           value_of(r, "curvature_pairing_rhs")));
      higgs_pairing = std::max(higgs_pairing, relative_discrepancy(value_of(r, "higgs_pairing_lhs"),
                                                                   value_of(r, "higgs_pairing_rhs")));
    }
  }
  out.require(analytic <= 1e-10, "analytic vs Omega <= 1e-10");
  out.require(fd <= 1e-5, "finite difference vs Omega <= 1e-5");
  out.require(curvature_pairing <= 1e-11, "linearized curvature identity <= 1e-11");
  out.require(higgs_pairing <= 1e-11, "linearized Higgs identity <= 1e-11");
  out.detail << "analytic " << analytic << ", fd " << fd << ", curvature pairing " << curvature_pairing
             << ", Higgs pairing " << higgs_pairing;
  return out;
}

// 4 -----------------------------------------------------------------------------
Outcome prequantum_identity() {
  Outcome out;
  Stopwatch clock;
  double total = 0.0, variants = 0.0;
  for (int n : {1, 2, 3}) {
    for (int t = 0; t < kTrials; ++t) {
      const IdentityReport r = prequantum_check(sample_tangent(n, t, 0), sample_tangent(n, t, 2));
      total = std::max(total, discrepancy_of(r, "total_vs_omega"));
      variants = std::max(variants, discrepancy_of(r, "R2_variants"));
    }
  }
  const double elapsed = clock.seconds();
  out.require(total <= 1e-10, "F_L^-2 + F_R^2 = (i/pi) Omega <= 1e-10");
  out.require(variants <= 1e-11, "R^2 variants <= 1e-11");
  out.require(elapsed <= 10.0, "runtime <= 10 s");
  out.detail << "sum vs (i/pi)Omega " << total << ", variants " << variants << ", " << elapsed << " s";
  return out;
}

// 5 -----------------------------------------------------------------------------
Outcome spectrum_invariance() {
  Outcome out;
  Stopwatch clock;
  double worst = 0.0, eigvec = 0.0;
  bool kernels_equal = true;
  struct Case {
    int side;
    int rank;
  };
  for (const Case cs : {Case{6, 1}, Case{4, 2}}) {
    const SurfaceGrid grid(cs.side, 1.0);
    for (int t = 0; t < 5; ++t) {
      const std::uint64_t base = derive_seed(0x5BEC, 10 * cs.side + t);
      const ReferenceConnection a0(random_form(grid, FormDegree::ZeroOne, cs.rank, derive_seed(base, 1), 1, 0.5));
      const LatticeForm phi = random_form(grid, FormDegree::OneZero, cs.rank, derive_seed(base, 2), 1, 0.5);
      const GaugeElement g = exponentiate(random_skew_hermitian(grid, cs.rank, derive_seed(base, 3)), 2.0);
      const SpectrumReport r = laplacian_spectrum_invariance(a0, phi, g, 10);
      worst = std::max(worst, r.max_rel_discrepancy);
      eigvec = std::max(eigvec, r.eigenvector_residual);
      kernels_equal = kernels_equal && r.kernel_base == r.kernel_gauged;
    }
  }
  const double elapsed = clock.seconds();
  out.require(worst <= 1e-9, "10 lowest eigenvalues <= 1e-9 relative");
  out.require(kernels_equal, "kernel dimensions equal");
  out.require(elapsed <= 60.0, "runtime <= 60 s");
  out.detail << "max relative eigenvalue gap " << worst << ", eigenvector map residual " << eigvec << ", "
             << elapsed << " s";
  return out;
}

// 6 -----------------------------------------------------------------------------
double max_residual(const Configuration& c) {
  const auto [r1, r2] = selfduality_residuals(c);
  return std::max(l2_norm(r1), l2_norm(r2));
}

bool strictly_decreasing(const FlowTrace& trace) {
  for (std::size_t i = 1; i < trace.records.size(); ++i) {
    if (!(trace.records[i].energy < trace.records[i - 1].energy)) return false;
  }
  return true;
}

FlowResult rank_two_flow(std::uint64_t seed) {
  FlowParams p;
  p.max_iters = 100000;
  p.target_residual = 1e-6;
  return gradient_flow(random_configuration(kGrid8, 2, seed, 0.5), p);
}

FlowResult rank_one_flow(std::uint64_t seed) {
  FlowParams p;
  p.target_residual = 1e-8;
  return gradient_flow(random_configuration(kGrid8, 1, seed, 1.0), p);
}

Outcome solver_soundness() {
  Outcome out;
  Stopwatch clock;

  const FlowResult at_seed = gradient_flow(seed_solution(kGrid8, 1, {1.0, 2.0}), FlowParams{});
  out.require(at_seed.trace.records.size() == 1 && at_seed.trace.last().r1_norm == 0.0 &&
                  at_seed.trace.last().r2_norm == 0.0 && at_seed.trace.status == FlowStatus::Converged,
              "exact seed terminates at iteration 0 with zero residuals");

  bool monotone = true;
  double worst_n1 = 0.0;
  for (std::uint64_t seed : {1, 2, 3}) {
    const FlowResult r = rank_one_flow(seed);
    worst_n1 = std::max(worst_n1, max_residual(r.configuration));
    monotone = monotone && strictly_decreasing(r.trace);
  }
  out.require(worst_n1 <= 1e-8, "n=1 max residual <= 1e-8");

  double worst_n2 = 0.0;
  long iters_n2 = 0;
  for (std::uint64_t seed : {1, 2, 3}) {
    const FlowResult r = rank_two_flow(seed);
    worst_n2 = std::max(worst_n2, max_residual(r.configuration));
    iters_n2 = std::max(iters_n2, r.trace.last().iter);
    monotone = monotone && strictly_decreasing(r.trace);
  }
  out.require(worst_n2 <= 1e-6, "n=2 max residual <= 1e-6 within 1e5 iterations");
  out.require(monotone, "energy strictly decreasing");
  const double elapsed = clock.seconds();
  out.require(elapsed <= 300.0, "runtime <= 5 min");
  out.detail << "n=1 worst " << worst_n1 << ", n=2 worst " << worst_n2 << " after " << iters_n2
             << " iterations, " << elapsed << " s";
  return out;
}

// 7 -----------------------------------------------------------------------------
Outcome slice_geometry() {
  Outcome out;
  double orth = 0.0, idem = 0.0, worst_ratio = 0.0;
  int checked = 0;
  for (int n : {1, 2}) {
    const FlowResult flow = n == 1 ? rank_one_flow(4) : rank_two_flow(4);
    const Configuration& c = flow.configuration;
    const double residual = max_residual(c);
    const double threshold = 100.0 * residual;
    const OrbitBasis basis = orbit_basis(c, orbit_generators(kGrid8, n, 8, 0x51CE + n));
    const LinearizedSolutions sols = sample_linearized_solutions(c, basis, 3, 0x5A3 + n);
    out.require(!sols.samples.empty(), "linearized solutions exist");
    for (const TangentVector& x : sols.samples) {
      const IdentityReport r = slice_invariance_check(c, x, basis, threshold);
      orth = std::max(orth, discrepancy_of(r, "projection_orthogonality"));
      idem = std::max(idem, discrepancy_of(r, "projection_idempotence"));
      for (const char* name : {"IX_orbit_orthogonality", "IX_linearized_eq2", "IX_weak_linearized_moment"}) {
        worst_ratio = std::max(worst_ratio, discrepancy_of(r, name) / threshold);
      }
      ++checked;
    }
    // Projection checks also on a generic direction.
    const IdentityReport generic = slice_invariance_check(c, random_tangent(kGrid8, n, 0x6E + n), basis, threshold);
    orth = std::max(orth, discrepancy_of(generic, "projection_orthogonality"));
    idem = std::max(idem, discrepancy_of(generic, "projection_idempotence"));
  }
  out.require(orth <= 1e-9, "projection orthogonality <= 1e-9");
  out.require(idem <= 1e-10, "idempotence <= 1e-10");
  out.require(worst_ratio <= 1.0, "I-invariance within 100x terminal residual");
  out.detail << checked << " slice tangents, orthogonality " << orth << ", idempotence " << idem
             << ", worst I-check / threshold " << worst_ratio;
  return out;
}

// 8 -----------------------------------------------------------------------------
Outcome determinism() {
  Outcome out;
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "hitchin_acceptance_determinism";
  fs::remove_all(root);
  lab::RunConfig config;
  std::ostringstream log;
  setenv("HITCHIN_LAB_THREADS", "1", 1);
  fs::create_directories(root / "a");
  const int a = lab::cmd_verify(config, root / "a", log);
  setenv("HITCHIN_LAB_THREADS", "2", 1);
  fs::create_directories(root / "b");
  const int b = lab::cmd_verify(config, root / "b", log);
  unsetenv("HITCHIN_LAB_THREADS");
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const std::string ra = slurp(root / "a" / config.verify.report);
  const std::string rb = slurp(root / "b" / config.verify.report);
  out.require(!ra.empty() && ra == rb, "byte-identical verify payloads");
  out.detail << "verify exits " << a << "/" << b << ", " << ra.size() << " bytes, "
             << (ra == rb ? "identical" : "different");
  fs::remove_all(root);
  return out;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const Criterion criteria[] = {
      {1, "metric equivalence", metric_equivalence},
      {2, "symplectic form consistency", symplectic_consistency},
      {3, "Hamiltonian identity", hamiltonian_identity},
      {4, "prequantum curvature identity", prequantum_identity},
      {5, "spectrum gauge invariance", spectrum_invariance},
      {6, "solver soundness", solver_soundness},
      {7, "slice geometry at flowed near-solutions", slice_geometry},
      {8, "determinism", determinism},
  };
  int only = 0;
  if (argc == 3 && std::string(argv[1]) == "--criterion") only = std::atoi(argv[2]);
  else if (argc != 1) {
    std::cerr << "usage: hitchin_acceptance [--criterion K]\n";
    return 2;
  }

  bool all = true;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::cout << "CRITERION " << c.id << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << c.title << " :: "
              << o.detail.str() << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
