#pragma once

#include <cstddef>

#include "stokes0d/coupled.hpp"
#include "stokes0d/exact.hpp"
#include "stokes0d/params.hpp"

namespace stokes0d {

enum class Forcing {
  Manufactured,  // body force, traction and generators of the exact solution
  None,          // everything grounded; the exact solution only supplies initial data
};

struct ExampleOptions {
  int example = 1;
  bool nonlinear = true;  // first example only
  std::size_t nx = 100;
  std::size_t ny = 20;
  Forcing forcing = Forcing::Manufactured;
};

struct Problem {
  CoupledSystem system;
  ExactPtr exact;
};

/// Builds the coupled system of one benchmark. Throws std::invalid_argument
/// for an unknown example or parameters that violate positivity.
Problem build_example(const ParamSet& p, const ExampleOptions& options);

ExactPtr build_exact(const ParamSet& p, int example, bool nonlinear);

/// Step-2 substeps used for each example by default.
int default_substeps(int example);

}  // namespace stokes0d
