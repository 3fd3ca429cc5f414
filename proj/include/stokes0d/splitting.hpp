#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "stokes0d/circuit.hpp"
#include "stokes0d/coupled.hpp"
#include "stokes0d/sparse.hpp"

namespace stokes0d {

struct StepConfig {
  double dt = 0.01;  // global step, s
  int substeps = 1;  // Step-2 subcycles, dt2 = dt / substeps

  void validate() const;
};

struct SchemeOptions {
  CoefficientFreeze freeze = CoefficientFreeze::SubstepStart;
  /// Test-only: the interface pressure pi enters the Stokes momentum balance
  /// at its old value instead of implicitly.
  bool explicit_interface_pressure = false;
};

struct StepRecord {
  std::size_t step = 0;           // 1-based
  const CoupledState& before;     // t^n
  const CoupledState& half;       // after Step 1
  const CoupledState& after;      // t^{n+1}
};

class StepObserver {
 public:
  virtual ~StepObserver() = default;
  virtual void start(const CoupledState&) {}
  virtual void observe(const StepRecord& record) = 0;
  /// run() stops after the step in which any observer reports done.
  virtual bool done() const { return false; }
};

/// First-order splitting: Step 1 solves Stokes together with the interface
/// flow rates and node pressures implicitly, Step 2 subcycles the circuits
/// with the velocity frozen. The system must outlive the scheme.
class SplittingScheme {
 public:
  explicit SplittingScheme(const CoupledSystem& system, SchemeOptions options = {});
  ~SplittingScheme();
  SplittingScheme(const SplittingScheme&) = delete;
  SplittingScheme& operator=(const SplittingScheme&) = delete;

  /// New velocities, pressures, interface values and pi entries; other
  /// circuit entries and the time are copied from `state`.
  CoupledState step1(const CoupledState& state, double dt);
  /// Circuits advanced by `substeps` implicit-Euler steps; time set to t + dt.
  CoupledState step2(const CoupledState& half, double dt, int substeps) const;
  CoupledState advance(const CoupledState& state, const StepConfig& config);
  /// Applies advance() at most n_steps times, notifying observers after each
  /// step. Steps actually taken are written to `taken` when given.
  CoupledState run(CoupledState state, const StepConfig& config, std::size_t n_steps,
                   const std::vector<StepObserver*>& observers = {}, std::size_t* taken = nullptr);

  const CoupledSystem& system() const { return system_; }
  const SchemeOptions& options() const { return options_; }
  std::size_t factorizations() const { return factorizations_; }
  /// Unknowns of the Step-1 system.
  std::size_t unknowns() const { return total_; }

 private:
  void prepare(double dt);

  const CoupledSystem& system_;
  SchemeOptions options_;
  std::vector<std::size_t> velocity_offset_;
  std::vector<std::size_t> pressure_offset_;
  std::size_t interface_offset_ = 0;
  std::size_t total_ = 0;
  std::optional<double> factored_dt_;
  std::unique_ptr<LUFactorization> lu_;
  std::size_t factorizations_ = 0;
};

}  // namespace stokes0d
