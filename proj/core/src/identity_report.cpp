#include "hitchin/identity_report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hitchin {

double relative_discrepancy(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) / scale;
}

double relative_discrepancy(Complex a, Complex b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) / scale;
}

void IdentityReport::add_value(std::string name, Complex value) {
  values.push_back({std::move(name), value});
}

void IdentityReport::add_discrepancy(std::string name, double value, double tol) {
  discrepancies.push_back({std::move(name), value, tol});
  finalize();
}

void IdentityReport::override_tolerance(double tol) {
  for (auto& d : discrepancies) d.tolerance = tol;
  finalize();
}

void IdentityReport::finalize() {
  pass = std::all_of(discrepancies.begin(), discrepancies.end(),
                     [](const Discrepancy& d) { return d.pass(); });
  // NaN discrepancies compare false against the tolerance, so they fail above.
  tolerance = 0.0;
  if (!discrepancies.empty()) {
    tolerance = std::numeric_limits<double>::infinity();
    for (const auto& d : discrepancies) tolerance = std::min(tolerance, d.tolerance);
  }
}

double IdentityReport::max_discrepancy() const noexcept {
  double worst = 0.0;
  for (const auto& d : discrepancies) worst = std::max(worst, d.value);
  return worst;
}

std::string IdentityReport::to_json_line() const {
  nlohmann::ordered_json j;
  j["identity_name"] = identity_name;
  j["inputs_digest"] = inputs_digest;
  auto& vals = j["values"] = nlohmann::ordered_json::array();
  for (const auto& v : values) {
    vals.push_back({{"name", v.name}, {"re", v.value.real()}, {"im", v.value.imag()}});
  }
  auto& disc = j["discrepancies"] = nlohmann::ordered_json::array();
  for (const auto& d : discrepancies) {
    disc.push_back({{"name", d.name}, {"value", d.value}, {"tolerance", d.tolerance}});
  }
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  return j.dump();
}

std::string make_digest(std::uint64_t seed, int trial, int side_count, int rank) {
  std::ostringstream out;
  out << "seed=" << seed << ";trial=" << trial << ";N=" << side_count << ";n=" << rank;
  return out.str();
}

}  // namespace hitchin
