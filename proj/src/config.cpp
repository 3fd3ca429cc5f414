#include "stokes0d/config.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace stokes0d {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double to_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  const auto t = trim(text);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw std::invalid_argument("config: '" + key + "' expects a number, got '" + text + "'");
  }
  return v;
}

std::size_t to_count(const std::string& key, const std::string& text) {
  const double v = to_double(key, text);
  if (v < 0.0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
    throw std::invalid_argument("config: '" + key + "' expects a non-negative integer");
  }
  return static_cast<std::size_t>(v);
}

bool to_bool(const std::string& key, const std::string& text) {
  const auto t = trim(text);
  if (t == "true" || t == "1") return true;
  if (t == "false" || t == "0") return false;
  throw std::invalid_argument("config: '" + key + "' expects true or false");
}

}  // namespace

void RunConfig::validate() const {
  if (example < 1 || example > 3) throw std::invalid_argument("config: example must be 1, 2 or 3");
  if (nonlinear && example != 1) throw std::invalid_argument("config: nonlinear applies to example 1 only");
  if (!(dt > 0.0)) throw std::invalid_argument("config: dt must be positive");
  if (substeps < 0) throw std::invalid_argument("config: sub must be non-negative");
  if (nx == 0 || ny == 0) throw std::invalid_argument("config: nx and ny must be positive");
  if (!(eps_per > 0.0)) throw std::invalid_argument("config: eps_per must be positive");
  for (double d : dts) {
    if (!(d > 0.0)) throw std::invalid_argument("config: dts must be positive");
  }
  for (const auto& [name, value] : overrides) {
    if (!ParamSet::used_by(name, example)) {
      throw std::invalid_argument("config: parameter '" + name + "' does not enter example " + std::to_string(example));
    }
  }
}

int RunConfig::effective_substeps() const {
  if (substeps > 0) return substeps;
  return example == 1 ? 5 : 10;
}

ParamSet RunConfig::params() const {
  ParamSet p;
  for (const auto& [name, value] : overrides) p.set(name, value);
  return p;
}

std::pair<std::string, double> parse_override(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("override '" + text + "' is not name=value");
  const auto name = trim(text.substr(0, eq));
  ParamSet probe;
  probe.get(name);
  return {name, to_double(name, text.substr(eq + 1))};
}

std::string emit_config(const RunConfig& c) {
  std::ostringstream o;
  o << "example = " << c.example << "\n";
  o << "nonlinear = " << (c.nonlinear ? "true" : "false") << "\n";
  o << "dt = " << fmt(c.dt) << "\n";
  o << "sub = " << c.substeps << "\n";
  o << "nx = " << c.nx << "\n";
  o << "ny = " << c.ny << "\n";
  o << "max_periods = " << c.max_periods << "\n";
  o << "eps_per = " << fmt(c.eps_per) << "\n";
  o << "out = " << c.out << "\n";
  o << "steps = " << c.steps << "\n";
  o << "explicit_pi = " << (c.explicit_pi ? "true" : "false") << "\n";
  if (!c.dts.empty()) {
    o << "dts = ";
    for (std::size_t i = 0; i < c.dts.size(); ++i) o << (i ? ", " : "") << fmt(c.dts[i]);
    o << "\n";
  }
  for (const auto& [name, value] : c.overrides) o << "set = " << name << "=" << fmt(value) << "\n";
  return o.str();
}

RunConfig parse_config(std::istream& in) {
  RunConfig c;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "example") {
      c.example = static_cast<int>(to_count(key, value));
    } else if (key == "nonlinear") {
      c.nonlinear = to_bool(key, value);
    } else if (key == "dt") {
      c.dt = to_double(key, value);
    } else if (key == "sub") {
      c.substeps = static_cast<int>(to_count(key, value));
    } else if (key == "nx") {
      c.nx = to_count(key, value);
    } else if (key == "ny") {
      c.ny = to_count(key, value);
    } else if (key == "max_periods") {
      c.max_periods = to_count(key, value);
    } else if (key == "eps_per") {
      c.eps_per = to_double(key, value);
    } else if (key == "out") {
      c.out = value;
    } else if (key == "steps") {
      c.steps = to_count(key, value);
    } else if (key == "explicit_pi") {
      c.explicit_pi = to_bool(key, value);
    } else if (key == "dts") {
      c.dts.clear();
      std::istringstream list(value);
      std::string item;
      while (std::getline(list, item, ',')) c.dts.push_back(to_double(key, item));
    } else if (key == "set") {
      c.overrides.insert_or_assign(parse_override(value).first, parse_override(value).second);
    } else {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return c;
}

RunConfig parse_config_string(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

}  // namespace stokes0d
