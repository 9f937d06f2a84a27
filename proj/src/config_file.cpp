#include "wellbound/config_file.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace wellbound {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    if (!std::isfinite(v)) throw std::invalid_argument("not finite");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: invalid numeric value for '" + key + "': " + value);
  }
}

}  // namespace

TrapSetup parse_trap_setup(std::istream& in) {
  std::map<std::string, std::string> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " is not 'key = value': " + stripped);
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw std::invalid_argument("config: empty key or value on line " +
                                  std::to_string(lineno));
    }
    if (!entries.emplace(key, value).second) {
      throw std::invalid_argument("config: duplicate key '" + key + "'");
    }
  }

  static const char* known[] = {"atom",          "mass_kg",       "scattering_length_m",
                                "omega_perp_hz", "trap_length_m", "trap_depth_nk",
                                "n_particles"};
  for (const auto& [key, value] : entries) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  for (const char* k : known) {
    if (!entries.count(k)) throw std::invalid_argument("config: missing key '" + std::string(k) + "'");
  }

  TrapSetup setup;
  setup.atom = entries.at("atom");
  setup.config.atom_mass = parse_double("mass_kg", entries.at("mass_kg"));
  setup.config.scattering_length =
      parse_double("scattering_length_m", entries.at("scattering_length_m"));
  setup.config.omega_perp =
      2.0 * std::numbers::pi * parse_double("omega_perp_hz", entries.at("omega_perp_hz"));
  setup.config.trap_length = parse_double("trap_length_m", entries.at("trap_length_m"));
  setup.config.trap_depth =
      nanokelvin_to_joule(parse_double("trap_depth_nk", entries.at("trap_depth_nk")));

  const double n_raw = parse_double("n_particles", entries.at("n_particles"));
  if (n_raw < 1.0 || n_raw != std::floor(n_raw) || n_raw > 1e6) {
    throw std::invalid_argument("config: n_particles must be a positive integer");
  }
  setup.n_particles = static_cast<int>(n_raw);

  validate(setup.config);
  return setup;
}

TrapSetup load_trap_setup(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  return parse_trap_setup(in);
}

std::string format_trap_setup(const TrapSetup& setup) {
  std::ostringstream out;
  out.precision(17);
  out << "atom = " << setup.atom << '\n'
      << "mass_kg = " << setup.config.atom_mass << '\n'
      << "scattering_length_m = " << setup.config.scattering_length << '\n'
      << "omega_perp_hz = " << setup.config.omega_perp / (2.0 * std::numbers::pi) << '\n'
      << "trap_length_m = " << setup.config.trap_length << '\n'
      << "trap_depth_nk = " << joule_to_nanokelvin(setup.config.trap_depth) << '\n'
      << "n_particles = " << setup.n_particles << '\n';
  return out.str();
}

}  // namespace wellbound
