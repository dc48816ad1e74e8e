#include "hitchin_lab/run_config.hpp"

#include "hitchin/errors.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <thread>

namespace hitchin::lab {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>> kKnownKeys = {
    {"grid", {"N", "L", "n", "seed"}},
    {"verify", {"trials", "tolerance", "report"}},
    {"solve",
     {"step_size", "max_iters", "target_residual", "backtrack", "growth", "armijo", "bb_steps", "amplitude",
      "resume", "trace", "output"}},
    {"spectrum", {"k", "gauge", "gauge_amplitude", "field_amplitude", "report"}},
};

template <typename T>
void read(const pt::ptree& section, const std::string& name, const std::string& key, T& target) {
  const auto raw = section.get_optional<std::string>(key);
  if (!raw) return;
  const auto value = section.get_optional<T>(key);
  if (!value) throw ConfigError("[" + name + "] " + key + ": cannot parse '" + *raw + "'");
  target = *value;
}

void read_seed(const pt::ptree& section, std::uint64_t& target) {
  const auto raw = section.get_optional<std::string>("seed");
  if (!raw) return;
  const char* end = raw->data() + raw->size();
  const auto [ptr, ec] = std::from_chars(raw->data(), end, target);
  if (ec != std::errc{} || ptr != end) throw ConfigError("[grid] seed: not an unsigned 64-bit integer: '" + *raw + "'");
}

void require(bool condition, const std::string& message) {
  if (!condition) throw ConfigError(message);
}

}  // namespace

RunConfig parse_run_config(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }

  for (const auto& [section, body] : tree) {
    const auto known = kKnownKeys.find(section);
    if (known == kKnownKeys.end()) {
      throw ConfigError(body.empty() ? "config: key '" + section + "' outside any section"
                                     : "config: unknown section [" + section + "]");
    }
    for (const auto& [key, value] : body) {
      if (!known->second.contains(key)) throw ConfigError("config: unknown key [" + section + "] " + key);
    }
  }

  RunConfig rc;
  const pt::ptree empty;
  const auto section = [&](const char* name) -> const pt::ptree& {
    const auto child = tree.get_child_optional(name);
    return child ? *child : empty;
  };

  const pt::ptree& grid = section("grid");
  read(grid, "grid", "N", rc.grid.side_count);
  read(grid, "grid", "L", rc.grid.side_length);
  read(grid, "grid", "n", rc.grid.rank);
  read_seed(grid, rc.grid.seed);
  require(rc.grid.side_count >= 2, "[grid] N must be >= 2");
  require(rc.grid.side_length > 0.0, "[grid] L must be > 0");
  require(rc.grid.rank >= 1 && rc.grid.rank <= 16, "[grid] n must lie in [1, 16]");

  const pt::ptree& verify = section("verify");
  read(verify, "verify", "trials", rc.verify.trials);
  if (verify.get_optional<std::string>("tolerance")) {
    double tol = 0.0;
    read(verify, "verify", "tolerance", tol);
    require(tol >= 0.0, "[verify] tolerance must be >= 0");
    rc.verify.tolerance = tol;
  }
  read(verify, "verify", "report", rc.verify.report);
  require(rc.verify.trials >= 1, "[verify] trials must be >= 1");

  const pt::ptree& solve = section("solve");
  FlowParams& f = rc.solve.flow;
  f.target_residual = 1e-8;
  read(solve, "solve", "step_size", f.step_size);
  read(solve, "solve", "max_iters", f.max_iters);
  read(solve, "solve", "target_residual", f.target_residual);
  read(solve, "solve", "backtrack", f.backtrack);
  read(solve, "solve", "growth", f.growth);
  read(solve, "solve", "armijo", f.armijo);
  read(solve, "solve", "bb_steps", f.bb_steps);
  read(solve, "solve", "amplitude", rc.solve.amplitude);
  read(solve, "solve", "resume", rc.solve.resume);
  read(solve, "solve", "trace", rc.solve.trace);
  read(solve, "solve", "output", rc.solve.output);
  f.seed = rc.grid.seed;
  try {
    f.validate();
  } catch (const DomainError& e) {
    throw ConfigError(std::string("[solve] ") + e.what());
  }
  require(rc.solve.amplitude > 0.0, "[solve] amplitude must be > 0");

  const pt::ptree& spectrum = section("spectrum");
  read(spectrum, "spectrum", "k", rc.spectrum.k);
  read(spectrum, "spectrum", "gauge", rc.spectrum.gauge);
  read(spectrum, "spectrum", "gauge_amplitude", rc.spectrum.gauge_amplitude);
  read(spectrum, "spectrum", "field_amplitude", rc.spectrum.field_amplitude);
  read(spectrum, "spectrum", "report", rc.spectrum.report);
  require(rc.spectrum.k >= 1, "[spectrum] k must be >= 1");
  require(rc.spectrum.gauge == "random" || rc.spectrum.gauge == "identity",
          "[spectrum] gauge must be 'random' or 'identity'");
  require(rc.spectrum.field_amplitude >= 0.0, "[spectrum] field_amplitude must be >= 0");
  return rc;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path.string());
  return parse_run_config(in);
}

int thread_budget() {
  if (const char* env = std::getenv("HITCHIN_LAB_THREADS")) {
    const std::string raw(env);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
    if (ec != std::errc{} || ptr != raw.data() + raw.size() || value < 1) {
      throw ConfigError("HITCHIN_LAB_THREADS must be a positive integer, got '" + raw + "'");
    }
    return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace hitchin::lab
