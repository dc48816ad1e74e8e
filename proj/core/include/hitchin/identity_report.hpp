#pragma once

// Structured outcome of a numerical identity check, serialized as one JSON
// object per line.

#include "hitchin/lattice_surface.hpp"

#include <string>
#include <vector>

namespace hitchin {

/// |a - b| / max(1, |a|, |b|): relative for large values, absolute near zero.
double relative_discrepancy(double a, double b);
double relative_discrepancy(Complex a, Complex b);

struct NamedValue {
  std::string name;
  Complex value;
};

struct Discrepancy {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass() const noexcept { return value <= tolerance; }
};

struct IdentityReport {
  std::string identity_name;
  std::string inputs_digest;
  std::vector<NamedValue> values;
  std::vector<Discrepancy> discrepancies;
  /// Tightest per-discrepancy tolerance; informational.
  double tolerance = 0.0;
  bool pass = true;

  void add_value(std::string name, Complex value);
  void add_discrepancy(std::string name, double value, double tolerance);
  /// Replace every per-discrepancy tolerance and recompute `pass`.
  void override_tolerance(double tolerance);
  /// Recompute `pass` and `tolerance` from the discrepancy list.
  void finalize();

  double max_discrepancy() const noexcept;
  /// One JSON object, no trailing newline. Deterministic key order and
  /// shortest round-trip number formatting.
  std::string to_json_line() const;
};

/// "seed=<s>;trial=<t>;N=<N>;n=<n>" style digest helper.
std::string make_digest(std::uint64_t seed, int trial, int side_count, int rank);

}  // namespace hitchin
