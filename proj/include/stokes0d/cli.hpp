#pragma once

#include <iosfwd>
#include <string>

#include "stokes0d/config.hpp"
#include "stokes0d/problems.hpp"
#include "stokes0d/splitting.hpp"

namespace stokes0d {

/// Header and row writer for the per-step series of a simulation.
class SeriesWriter : public StepObserver {
 public:
  SeriesWriter(const CoupledSystem& system, std::ostream& out);

  void start(const CoupledState& state) override;
  void observe(const StepRecord& record) override;

 private:
  void row(const CoupledState& state);

  const CoupledSystem& system_;
  std::ostream& out_;
};

/// Each command validates the configuration, writes its files below
/// config.out, prints a structured summary to `log` and returns the process
/// exit code (0 on success).
int cmd_simulate(const RunConfig& config, std::ostream& log);
int cmd_convergence(const RunConfig& config, std::ostream& log);
int cmd_stability(const RunConfig& config, std::ostream& log);
int cmd_verify_oracle(const RunConfig& config, std::ostream& log);

/// Writes the mesh of every domain of the configured example to `path`.
void dump_mesh(const RunConfig& config, const std::string& path);

}  // namespace stokes0d
