#pragma once

// Configuration files: one line of JSON header, then raw little-endian
// float64 data.
//
//   {"format":"hitchin-config","version":1,"N":8,"L":1.0,"n":2,"seed":42,
//    "endianness":"little","arrays":["A01","Phi10"]}\n
//   A01 coefficients, then Phi10 coefficients.
//
// Each array holds N²·n² complex entries: sites in row-major order
// (s = k·N + j), each site's matrix in row-major order, every entry written
// as (re, im). The header may carry "flow_step" and "flow_iteration", the
// next line-search step and the iteration count when a flow was checkpointed.

#include "hitchin/hitchin_config.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

namespace hitchin {

struct StoredConfiguration {
  Configuration configuration;
  std::uint64_t seed = 0;
  std::optional<double> flow_step;
  std::optional<long> flow_iteration;
};

void write_configuration(std::ostream& out, const StoredConfiguration& stored);
/// Throws DomainError on a malformed header or truncated payload.
StoredConfiguration read_configuration(std::istream& in);

void save_configuration(const std::filesystem::path& path, const StoredConfiguration& stored);
StoredConfiguration load_configuration(const std::filesystem::path& path);

}  // namespace hitchin
