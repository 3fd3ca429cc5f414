#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "stokes0d/params.hpp"

namespace stokes0d {

/// Settings shared by the CLI commands. substeps == 0 selects the example
/// default.
struct RunConfig {
  int example = 1;
  bool nonlinear = false;
  double dt = 0.01;
  int substeps = 0;
  std::size_t nx = 100;
  std::size_t ny = 20;
  std::size_t max_periods = 20;
  double eps_per = 1e-6;
  std::string out = "out";
  std::map<std::string, double> overrides;
  std::vector<double> dts;
  std::size_t steps = 200;
  bool explicit_pi = false;

  /// Throws std::invalid_argument on out-of-range values or overrides that do
  /// not belong to the example.
  void validate() const;
  int effective_substeps() const;
  /// Default parameters with the overrides applied.
  ParamSet params() const;

  bool operator==(const RunConfig&) const = default;
};

/// Line-oriented "key = value" text. Overrides appear as "set = name=value",
/// lists as comma separated values; '#' starts a comment.
std::string emit_config(const RunConfig& config);
RunConfig parse_config(std::istream& in);
RunConfig parse_config_string(const std::string& text);

/// Parses "name=value"; throws std::invalid_argument when malformed.
std::pair<std::string, double> parse_override(const std::string& text);

}  // namespace stokes0d
