#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace stokes0d {

/// Physical and circuit constants of the three benchmark problems (cgs units,
/// flow rates per unit length). Defaults are the published benchmark values.
struct ParamSet {
  // Common.
  double H = 2.0;       // cm
  double L = 10.0;      // cm
  double rho = 1.0;     // g cm^-3
  double mu = 1.0;      // g cm^-1 s^-1
  double V0 = 2.0;      // cm s^-1
  double omega = 3.14159265358979323846;  // s^-1
  double k = 0.1;       // cm^-1
  double s0 = 2.0;
  double s1 = 1.0;

  // Example 1 (also shared by 2 and 3 where the symbol coincides).
  double R11_1 = 10.0;   // g cm^-3 s^-1
  double Ra_bar = 10.0;
  double Rb = 10.0;
  double alpha0 = 10.0;
  double alpha1 = 1.0;
  double alpha2 = 0.001;  // g^-1 cm s^2
  double C11_1 = 0.001;   // g^-1 cm^3 s^2
  double Ca_bar = 0.01;
  double gamma1 = 1.0;    // cm^-2
  double a0 = 150.0;      // g cm^-1 s^-2
  double a1 = 1000.0;

  // Example 2.
  double Ra = 10.0;
  double R21_1 = 10.0;
  double C21_1 = 0.001;
  double La = 0.003;  // g cm^-3
  double a01 = 150.0;
  double a11 = 1000.0;
  double a02 = 75.0;
  double a12 = 500.0;

  // Example 3.
  double R11_2 = 50.0;
  double Rc = 70.0;
  double Lc = 0.003;
  double C11_2 = 0.001;

  double period() const;

  /// Throws std::invalid_argument for unknown names.
  void set(std::string_view name, double value);
  double get(std::string_view name) const;
  static const std::vector<std::string>& names();
  /// Whether a parameter enters the given example. Throws for unknown names.
  static bool used_by(std::string_view name, int example);

  /// Resistances, capacitances and inductances used by `example` that are not
  /// strictly positive, plus non-positive geometry/fluid constants.
  std::vector<std::string> violations(int example) const;
  /// Throws std::invalid_argument listing every violation.
  void validate(int example) const;

  bool operator==(const ParamSet&) const = default;
};

}  // namespace stokes0d
