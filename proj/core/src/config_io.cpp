#include "hitchin/config_io.hpp"

#include "hitchin/errors.hpp"

#include <nlohmann/json.hpp>

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace hitchin {

namespace {

void put_double(std::ostream& out, double value) {
  std::uint64_t bits = std::bit_cast<std::uint64_t>(value);
  char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((bits >> (8 * i)) & 0xFF);
  out.write(bytes, 8);
}

double get_double(std::istream& in) {
  unsigned char bytes[8];
  if (!in.read(reinterpret_cast<char*>(bytes), 8)) throw DomainError("configuration file: truncated payload");
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  return std::bit_cast<double>(bits);
}

void write_array(std::ostream& out, const LatticeForm& form) {
  const int n = form.rank();
  for (int s = 0; s < form.site_count(); ++s) {
    const auto m = form.at(s);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        put_double(out, m(r, c).real());
        put_double(out, m(r, c).imag());
      }
    }
  }
}

void read_array(std::istream& in, LatticeForm& form) {
  const int n = form.rank();
  for (int s = 0; s < form.site_count(); ++s) {
    auto m = form.at(s);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        const double re = get_double(in);
        const double im = get_double(in);
        m(r, c) = Complex(re, im);
      }
    }
  }
}

}  // namespace

void write_configuration(std::ostream& out, const StoredConfiguration& stored) {
  const Configuration& c = stored.configuration;
  nlohmann::ordered_json header;
  header["format"] = "hitchin-config";
  header["version"] = 1;
  header["N"] = c.grid().side_count();
  header["L"] = c.grid().side_length();
  header["n"] = c.rank();
  header["seed"] = stored.seed;
  header["endianness"] = "little";
  header["arrays"] = {"A01", "Phi10"};
  if (stored.flow_step) header["flow_step"] = *stored.flow_step;
  if (stored.flow_iteration) header["flow_iteration"] = *stored.flow_iteration;
  out << header.dump() << '\n';
  write_array(out, c.a01());
  write_array(out, c.phi10());
}

StoredConfiguration read_configuration(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DomainError("configuration file: missing header");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
    if (header.at("format") != "hitchin-config") throw DomainError("configuration file: unknown format");
    if (header.at("version") != 1) throw DomainError("configuration file: unsupported version");
    if (header.at("endianness") != "little") throw DomainError("configuration file: unsupported endianness");
    const SurfaceGrid grid(header.at("N").get<int>(), header.at("L").get<double>());
    const int rank = header.at("n").get<int>();
    if (rank < 1) throw DomainError("configuration file: rank must be >= 1");
    LatticeForm a01(grid, FormDegree::ZeroOne, rank);
    LatticeForm phi10(grid, FormDegree::OneZero, rank);
    read_array(in, a01);
    read_array(in, phi10);
    StoredConfiguration out{Configuration(std::move(a01), std::move(phi10)),
                            header.at("seed").get<std::uint64_t>(), std::nullopt, std::nullopt};
    if (header.contains("flow_step")) out.flow_step = header.at("flow_step").get<double>();
    if (header.contains("flow_iteration")) out.flow_iteration = header.at("flow_iteration").get<long>();
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("configuration file: bad header: ") + e.what());
  }
}

void save_configuration(const std::filesystem::path& path, const StoredConfiguration& stored) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open " + path.string() + " for writing");
  write_configuration(out, stored);
  if (!out) throw DomainError("write failed for " + path.string());
}

StoredConfiguration load_configuration(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path.string());
  return read_configuration(in);
}

}  // namespace hitchin
