#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stokes0d/analysis.hpp"
#include "stokes0d/problems.hpp"
#include "stokes0d/splitting.hpp"

namespace stokes0d {

/// Number of steps per period for a requested dt. Throws
/// std::invalid_argument unless dt divides the period (1e-9 relative).
std::size_t steps_per_period(double period, double dt);

struct PeriodicRunOptions {
  double dt = 0.01;
  int substeps = 1;
  std::size_t max_periods = 20;
  double eps_per = 1e-6;
  SchemeOptions scheme;
};

struct SimulationResult {
  double dt = 0.0;  // period / steps_per_period
  std::size_t steps_per_period = 0;
  std::size_t steps = 0;
  std::size_t periods = 0;
  bool converged = false;
  std::vector<double> gaps;
  std::optional<ErrorReport> errors;  // last completed period
  EnergyReport initial_energy;
  EnergyReport final_energy;
  CoupledState final_state;
};

/// Runs from the exact state at t = 0 until the periodicity gap drops below
/// eps_per or max_periods have elapsed. The gap is first available after
/// two periods. Extra observers see every step.
SimulationResult simulate_to_periodicity(const Problem& problem, const PeriodicRunOptions& options,
                                         const std::vector<StepObserver*>& extra = {});

struct ConvergenceRow {
  double dt = 0.0;
  SimulationResult result;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;  // in the order requested
  std::optional<double> slope_v, slope_p, slope_y;

  /// Every error strictly decreases as dt decreases.
  bool errors_decrease() const;
  bool all_converged() const;
};

/// Throws std::invalid_argument for an empty list or duplicate time steps.
ConvergenceReport convergence_study(const Problem& problem, const std::vector<double>& dts, int substeps,
                                    std::size_t max_periods, double eps_per);

struct StabilityCase {
  double dt = 0.0;
  std::size_t steps = 0;
  double initial_energy = 0.0;
  double max_increase = 0.0;        // max_n (E^{n+1} - E^n)
  double max_step1_increase = 0.0;  // max_n (E^{n+1/2} - E^n)
  double max_step2_increase = 0.0;  // max_n (E^{n+1} - E^{n+1/2})
  double max_identity_residual = 0.0;
  std::size_t identity_steps = 0;   // steps whose energy balance was resolvable
  double tolerance = 1e-12;         // relative to the initial energy
  double identity_tolerance = 1e-8;

  bool monotone() const { return max_increase <= tolerance * initial_energy; }
  bool chained() const {
    return max_step1_increase <= tolerance * initial_energy && max_step2_increase <= tolerance * initial_energy;
  }
  bool identity_holds() const { return identity_steps > 0 && max_identity_residual <= identity_tolerance; }
  bool passed() const { return monotone() && chained() && identity_holds(); }
};

struct StabilityOptions {
  std::vector<double> dts{0.1, 1.0, 10.0};
  std::size_t steps = 200;
  int substeps = 5;
  std::size_t nx = 100;
  std::size_t ny = 20;
  SchemeOptions scheme;
};

/// First example with constant coefficients and no forcing, started from the
/// exact state at t = 0.
std::vector<StabilityCase> stability_study(const ParamSet& p, const StabilityOptions& options);

}  // namespace stokes0d
