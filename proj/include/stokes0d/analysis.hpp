#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "stokes0d/coupled.hpp"
#include "stokes0d/exact.hpp"
#include "stokes0d/splitting.hpp"

namespace stokes0d {

/// Energy terms per unit length (cgs).
struct EnergyReport {
  double E_omega = 0.0;  // 1/2 rho ||v||^2
  double E_ups = 0.0;    // 1/2 y^T U y
  double D_omega = 0.0;  // mu ||grad v||^2
  double D_rc = 0.0;     // sum R Q^2
  double U_ups = 0.0;    // y^T B y
  double F_omega = 0.0;  // rho (f, v) - pbar int_Sigma v.n
  double F_ups = 0.0;    // s^T U y

  double total() const { return E_omega + E_ups; }
};

/// Forcing terms use state.t. dt_fd is the step of the dU/dt difference.
EnergyReport energy_report(const CoupledSystem& system, const CoupledState& state, double dt_fd = 1e-6);

struct EnergyBalance {
  double lhs = 0.0;
  double rhs = 0.0;
  double relative_residual() const;
  /// False once both sides drop below DBL_MIN / DBL_EPSILON, where subnormal
  /// arithmetic can no longer resolve a relative residual.
  bool resolvable() const;
};

/// Both sides of the Step-1 energy identity (unhalved norms) for the step
/// before -> half of size dt. Loads and U are taken at before.t + dt.
EnergyBalance step1_energy_balance(const CoupledSystem& system, const CoupledState& before, const CoupledState& half,
                                   double dt);

/// Squared-norm bookkeeping of one field over one period.
struct FieldGap {
  double difference = 0.0;
  double reference = 0.0;
};

/// Relative squared distance between consecutive periods, maximized over each
/// domain velocity and pressure and each circuit state. Each period holds
/// N+1 snapshots; norms are summed over the snapshots. Throws
/// std::domain_error when a reference norm vanishes.
double periodicity_gap(const CoupledSystem& system, const std::vector<CoupledState>& previous,
                       const std::vector<CoupledState>& current);

/// Streams the periodicity gap while the simulation runs, storing one period.
/// With a threshold, done() turns true once a gap falls below it.
class PeriodicityMonitor : public StepObserver {
 public:
  PeriodicityMonitor(const CoupledSystem& system, std::size_t steps_per_period,
                     std::optional<double> threshold = std::nullopt);

  void start(const CoupledState& state) override;
  void observe(const StepRecord& record) override;
  bool done() const override;

  std::size_t periods_completed() const { return periods_; }
  /// Gap of each completed period after the first.
  const std::vector<double>& gaps() const { return gaps_; }

 private:
  void push(const CoupledState& state);

  const CoupledSystem& system_;
  std::size_t steps_;
  std::optional<double> threshold_;
  std::vector<std::vector<Vector>> previous_;  // per snapshot, flattened fields
  std::vector<FieldGap> accum_;
  std::size_t index_ = 0;
  std::size_t periods_ = 0;
  bool have_previous_ = false;
  std::vector<double> gaps_;
};

struct InterfaceError {
  InterfaceId id;
  double max_flow_error = 0.0;
  double max_flow = 0.0;
  double max_pressure_error = 0.0;
  double max_pressure = 0.0;

  double relative_flow_error() const { return max_flow_error / max_flow; }
  double relative_pressure_error() const { return max_pressure_error / max_pressure; }
};

struct ErrorReport {
  double err_v = 0.0;
  double err_p = 0.0;
  double err_y = 0.0;
  std::size_t period = 0;  // 1-based index of the evaluated period
  std::vector<InterfaceError> interfaces;
};

/// Normalized errors against the exact solution, accumulated per period of
/// N steps (N+1 samples, endpoints shared by neighbouring periods).
class ErrorMonitor : public StepObserver {
 public:
  ErrorMonitor(const CoupledSystem& system, ExactPtr exact, std::size_t steps_per_period, double dt);

  void start(const CoupledState& state) override;
  void observe(const StepRecord& record) override;

  /// Report of the most recent completed period; throws if none.
  const ErrorReport& last() const;
  const std::vector<ErrorReport>& reports() const { return reports_; }

 private:
  void sample(const CoupledState& state);

  const CoupledSystem& system_;
  ExactPtr exact_;
  std::size_t steps_;
  double dt_;
  ErrorReport current_;
  std::size_t index_ = 0;
  std::vector<ErrorReport> reports_;
};

/// Errors of a single-period trajectory sampled at t^n = t_0 + n dt.
ErrorReport error_norms(const CoupledSystem& system, const ExactSolution& exact,
                        const std::vector<CoupledState>& trajectory, double dt);

/// Least-squares slope of log(error) against log(dt). Throws
/// std::invalid_argument for non-positive values or fewer than two distinct dt.
double convergence_rate(const std::vector<std::pair<double, double>>& samples);

}  // namespace stokes0d
