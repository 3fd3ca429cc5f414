#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stokes0d/params.hpp"
#include "stokes0d/problems.hpp"

namespace stokes0d {

struct ResidualCheck {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool passed = false;
  std::string detail;
};

struct ResidualReport {
  int example = 0;
  std::vector<ResidualCheck> checks;

  bool passed() const;
  /// Throws std::out_of_range for an unknown name.
  const ResidualCheck& find(const std::string& name) const;
};

struct VerifyOptions {
  std::size_t samples = 100;         // per period
  double algebraic_tolerance = 1e-10;
  double periodicity_tolerance = 1e-12;
  double weak_tolerance = 1e-4;      // relative weak-form Stokes residual on the default mesh
};

/// Self-consistency of the exact solution behind `problem`: circuit ODE,
/// interface relations, flux of the exact velocity, example identities,
/// periodicity and the weak-form Stokes residual of the interpolant.
ResidualReport verify_exact(const ParamSet& p, int example, bool nonlinear, const Problem& problem,
                            const VerifyOptions& options = {});

/// Checks parameter positivity first, then builds the problem and runs
/// verify_exact. Never throws for invalid parameters; they fail the report.
ResidualReport verify_oracle(const ParamSet& p, const ExampleOptions& example, const VerifyOptions& options = {});

}  // namespace stokes0d
