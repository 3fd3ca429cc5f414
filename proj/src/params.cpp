#include "stokes0d/params.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace stokes0d {

namespace {

struct Entry {
  const char* name;
  double ParamSet::*member;
  // Bit i set: must be positive for example i+1.
  unsigned positive_for;
  // Bit i set: enters example i+1.
  unsigned used_by;
};

constexpr unsigned kAll = 0b111;
constexpr unsigned kEx1 = 0b001;
constexpr unsigned kEx2 = 0b010;
constexpr unsigned kEx3 = 0b100;

const std::vector<Entry>& table() {
  static const std::vector<Entry> entries = {
      {"H", &ParamSet::H, kAll, kAll},
      {"L", &ParamSet::L, kAll, kAll},
      {"rho", &ParamSet::rho, kAll, kAll},
      {"mu", &ParamSet::mu, kAll, kAll},
      {"V0", &ParamSet::V0, 0, kAll},
      {"omega", &ParamSet::omega, kAll, kAll},
      {"k", &ParamSet::k, 0, kAll},
      {"s0", &ParamSet::s0, 0, kAll},
      {"s1", &ParamSet::s1, 0, kAll},
      {"R11_1", &ParamSet::R11_1, kAll, kAll},
      {"Ra_bar", &ParamSet::Ra_bar, kEx1, kEx1},
      {"Rb", &ParamSet::Rb, kAll, kAll},
      {"alpha0", &ParamSet::alpha0, 0, kEx1},
      {"alpha1", &ParamSet::alpha1, 0, kEx1},
      {"alpha2", &ParamSet::alpha2, 0, kEx1},
      {"C11_1", &ParamSet::C11_1, kAll, kAll},
      {"Ca_bar", &ParamSet::Ca_bar, kEx1, kEx1},
      {"gamma1", &ParamSet::gamma1, 0, kEx1},
      {"a0", &ParamSet::a0, 0, kEx1 | kEx3},
      {"a1", &ParamSet::a1, 0, kEx1 | kEx3},
      {"Ra", &ParamSet::Ra, kEx2 | kEx3, kEx2 | kEx3},
      {"R21_1", &ParamSet::R21_1, kEx2, kEx2},
      {"C21_1", &ParamSet::C21_1, kEx2, kEx2},
      {"La", &ParamSet::La, kEx2, kEx2},
      {"a01", &ParamSet::a01, 0, kEx2},
      {"a11", &ParamSet::a11, 0, kEx2},
      {"a02", &ParamSet::a02, 0, kEx2},
      {"a12", &ParamSet::a12, 0, kEx2},
      {"R11_2", &ParamSet::R11_2, kEx3, kEx3},
      {"Rc", &ParamSet::Rc, kEx3, kEx3},
      {"Lc", &ParamSet::Lc, kEx3, kEx3},
      {"C11_2", &ParamSet::C11_2, kEx3, kEx3},
  };
  return entries;
}

const Entry& find(std::string_view name) {
  const auto& t = table();
  auto it = std::find_if(t.begin(), t.end(), [&](const Entry& e) { return name == e.name; });
  if (it == t.end()) throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
  return *it;
}

}  // namespace

double ParamSet::period() const { return 2.0 * std::numbers::pi / omega; }

void ParamSet::set(std::string_view name, double value) { this->*(find(name).member) = value; }

double ParamSet::get(std::string_view name) const { return this->*(find(name).member); }

const std::vector<std::string>& ParamSet::names() {
  static const std::vector<std::string> out = [] {
    std::vector<std::string> n;
    for (const auto& e : table()) n.emplace_back(e.name);
    return n;
  }();
  return out;
}

bool ParamSet::used_by(std::string_view name, int example) {
  if (example < 1 || example > 3) throw std::invalid_argument("example must be 1, 2 or 3");
  return (find(name).used_by & (1u << (example - 1))) != 0;
}

std::vector<std::string> ParamSet::violations(int example) const {
  if (example < 1 || example > 3) throw std::invalid_argument("example must be 1, 2 or 3");
  const unsigned bit = 1u << (example - 1);
  std::vector<std::string> out;
  for (const auto& e : table()) {
    if ((e.positive_for & bit) && !(this->*(e.member) > 0.0)) out.emplace_back(e.name);
  }
  return out;
}

void ParamSet::validate(int example) const {
  const auto bad = violations(example);
  if (bad.empty()) return;
  std::string msg = "parameters must be positive:";
  for (const auto& b : bad) msg += " " + b;
  throw std::invalid_argument(msg);
}

}  // namespace stokes0d
