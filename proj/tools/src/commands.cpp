#include "hitchin_lab/commands.hpp"

#include "hitchin/config_io.hpp"
#include "hitchin/errors.hpp"
#include "hitchin/flow_solver.hpp"
#include "hitchin/quillen_curvature.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace hitchin::lab {

namespace {

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

class MetadataWriter {
 public:
  MetadataWriter(std::filesystem::path path, const char* command, const RunConfig& config)
      : path_(std::move(path)) {
    meta_["command"] = command;
    meta_["version"] = "0.1.0";
    meta_["seed"] = config.grid.seed;
    meta_["started_utc"] = utc_now();
  }
  void set(const char* key, nlohmann::ordered_json value) { meta_[key] = std::move(value); }
  ~MetadataWriter() {
    meta_["finished_utc"] = utc_now();
    std::ofstream out(path_);
    if (out) out << meta_.dump(2) << '\n';
  }

 private:
  std::filesystem::path path_;
  nlohmann::ordered_json meta_;
};

}  // namespace

int cmd_verify(const RunConfig& config, const std::filesystem::path& out, std::ostream& log) {
  const int threads = thread_budget();
  MetadataWriter meta(out / "verify.meta.json", "verify", config);
  meta.set("threads", threads);

  const std::vector<IdentityReport> reports = run_verify_suite(config.grid, config.verify, threads);
  std::ofstream file = open_output(out / config.verify.report);
  int failed = 0;
  for (const auto& r : reports) {
    file << r.to_json_line() << '\n';
    failed += r.pass ? 0 : 1;
  }
  log << "verify: " << reports.size() << " checks over " << config.verify.trials << " trials (N="
      << config.grid.side_count << ", n=" << config.grid.rank << "), " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_solve(const RunConfig& config, const std::filesystem::path& out, std::ostream& log) {
  MetadataWriter meta(out / "solve.meta.json", "solve", config);
  FlowParams params = config.solve.flow;
  long offset = 0;
  std::uint64_t seed = config.grid.seed;
  std::optional<Configuration> start;
  if (!config.solve.resume.empty()) {
    StoredConfiguration stored = load_configuration(config.solve.resume);
    if (stored.flow_step) params.step_size = *stored.flow_step;
    offset = stored.flow_iteration.value_or(0);
    seed = stored.seed;
    start = std::move(stored.configuration);
    meta.set("resumed_from", config.solve.resume);
  } else {
    const SurfaceGrid grid(config.grid.side_count, config.grid.side_length);
    start = random_configuration(grid, config.grid.rank, config.grid.seed, config.solve.amplitude);
  }

  const FlowResult result = gradient_flow(*start, params, offset);
  {
    std::ofstream trace = open_output(out / config.solve.trace);
    result.trace.write_csv(trace);
  }
  save_configuration(out / config.solve.output,
                     {result.configuration, seed, result.next_step, result.trace.last().iter});
  const std::string status = result.trace.status_json();
  {
    std::ofstream status_file = open_output(out / "flow_status.json");
    status_file << status << '\n';
  }
  log << status << '\n';
  return result.trace.status == FlowStatus::Converged ? kExitOk : kExitCheckFailed;
}

int cmd_spectrum(const RunConfig& config, const std::filesystem::path& out, std::ostream& log) {
  MetadataWriter meta(out / "spectrum.meta.json", "spectrum", config);
  const SurfaceGrid grid(config.grid.side_count, config.grid.side_length);
  const int n = config.grid.rank;
  const long dim = static_cast<long>(n) * n * grid.site_count();
  if (dim > kDenseSpectrumCap) {
    throw DomainError("spectrum: n²N² = " + std::to_string(dim) + " exceeds the dense eigensolver cap of " +
                      std::to_string(kDenseSpectrumCap));
  }
  const std::uint64_t seed = config.grid.seed;
  const SpectrumSettings& s = config.spectrum;
  const ReferenceConnection a0(random_form(grid, FormDegree::ZeroOne, n, derive_seed(seed, 20), 1, s.field_amplitude));
  const LatticeForm phi = random_form(grid, FormDegree::OneZero, n, derive_seed(seed, 21), 1, s.field_amplitude);
  const GaugeElement g = s.gauge == "identity"
                             ? GaugeElement::identity(grid, n)
                             : exponentiate(random_skew_hermitian(grid, n, derive_seed(seed, 22)), s.gauge_amplitude);

  const SpectrumReport report = laplacian_spectrum_invariance(a0, phi, g, s.k);
  std::ofstream file = open_output(out / s.report);
  file << report.to_json() << '\n';
  log << "spectrum: k=" << s.k << " dimension=" << dim << " kernel=" << report.kernel_base << "/"
      << report.kernel_gauged << " max_rel_discrepancy=" << report.max_rel_discrepancy
      << (report.pass ? " pass" : " FAIL") << '\n';
  return report.pass ? kExitOk : kExitCheckFailed;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks for the Hitchin moduli space on a lattice torus", "hitchin_lab"};
  app.require_subcommand(1);
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir = ".";
  for (const char* name : {"verify", "solve", "spectrum"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "run configuration (INI)")->required();
    sub->add_option("--seed", seed, "override [grid] seed");
    sub->add_option("--out", out_dir, "output directory");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    RunConfig config = load_run_config(config_path);
    if (seed) {
      config.grid.seed = *seed;
      config.solve.flow.seed = *seed;
    }
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw ConfigError("cannot create output directory " + out_dir + ": " + ec.message());
    if (command == "verify") return cmd_verify(config, out_dir, out);
    if (command == "solve") return cmd_solve(config, out_dir, out);
    return cmd_spectrum(config, out_dir, out);
  } catch (const ConfigError& e) {
    err << "hitchin_lab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "hitchin_lab: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "hitchin_lab: " << command << " failed: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

}  // namespace hitchin::lab
