#include "stokes0d/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace stokes0d {

std::size_t steps_per_period(double period, double dt) {
  if (!(dt > 0.0) || !(period > 0.0)) throw std::invalid_argument("steps_per_period: dt and period must be positive");
  const double ratio = period / dt;
  const double n = std::round(ratio);
  if (n < 1.0 || std::abs(ratio - n) > 1e-9 * ratio) {
    throw std::invalid_argument("dt must divide the period " + std::to_string(period));
  }
  return static_cast<std::size_t>(n);
}

SimulationResult simulate_to_periodicity(const Problem& problem, const PeriodicRunOptions& options,
                                         const std::vector<StepObserver*>& extra) {
  if (!(options.eps_per > 0.0)) throw std::invalid_argument("simulate_to_periodicity: eps_per must be positive");
  const double tau = problem.exact->period();
  SimulationResult out;
  out.steps_per_period = steps_per_period(tau, options.dt);
  out.dt = tau / static_cast<double>(out.steps_per_period);

  CoupledState state = exact_state(problem.system, *problem.exact, 0.0);
  out.initial_energy = energy_report(problem.system, state);
  out.final_energy = out.initial_energy;
  out.final_state = state;
  if (options.max_periods == 0) return out;

  SplittingScheme scheme(problem.system, options.scheme);
  PeriodicityMonitor periodic(problem.system, out.steps_per_period, options.eps_per);
  ErrorMonitor errors(problem.system, problem.exact, out.steps_per_period, out.dt);
  std::vector<StepObserver*> observers{&periodic, &errors};
  observers.insert(observers.end(), extra.begin(), extra.end());

  out.final_state = scheme.run(std::move(state), {out.dt, options.substeps},
                               out.steps_per_period * options.max_periods, observers, &out.steps);
  out.periods = periodic.periods_completed();
  out.gaps = periodic.gaps();
  out.converged = periodic.done();
  if (!errors.reports().empty()) out.errors = errors.last();
  out.final_energy = energy_report(problem.system, out.final_state);
  return out;
}

bool ConvergenceReport::errors_decrease() const {
  std::vector<const ConvergenceRow*> sorted;
  for (const auto& r : rows) {
    if (!r.result.errors) return false;
    sorted.push_back(&r);
  }
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->dt > b->dt; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const auto& a = *sorted[i - 1]->result.errors;
    const auto& b = *sorted[i]->result.errors;
    if (!(b.err_v < a.err_v) || !(b.err_p < a.err_p) || !(b.err_y < a.err_y)) return false;
  }
  return true;
}

bool ConvergenceReport::all_converged() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.result.converged; });
}

ConvergenceReport convergence_study(const Problem& problem, const std::vector<double>& dts, int substeps,
                                    std::size_t max_periods, double eps_per) {
  if (dts.empty()) throw std::invalid_argument("convergence_study: empty time-step list");
  if (std::set<double>(dts.begin(), dts.end()).size() != dts.size()) {
    throw std::invalid_argument("convergence_study: duplicate time steps");
  }
  ConvergenceReport report;
  for (double dt : dts) {
    report.rows.push_back({dt, simulate_to_periodicity(problem, {dt, substeps, max_periods, eps_per, {}})});
  }
  if (dts.size() >= 2 && std::all_of(report.rows.begin(), report.rows.end(), [](auto& r) { return r.result.errors; })) {
    std::vector<std::pair<double, double>> v, p, y;
    for (const auto& r : report.rows) {
      v.emplace_back(r.result.dt, r.result.errors->err_v);
      p.emplace_back(r.result.dt, r.result.errors->err_p);
      y.emplace_back(r.result.dt, r.result.errors->err_y);
    }
    report.slope_v = convergence_rate(v);
    report.slope_p = convergence_rate(p);
    report.slope_y = convergence_rate(y);
  }
  return report;
}

namespace {

class StabilityObserver : public StepObserver {
 public:
  StabilityObserver(const CoupledSystem& system, StabilityCase& c) : system_(system), case_(c) {}

  void start(const CoupledState& state) override {
    case_.initial_energy = energy_report(system_, state).total();
  }

  void observe(const StepRecord& r) override {
    const double e0 = energy_report(system_, r.before).total();
    const double eh = energy_report(system_, r.half).total();
    const double e1 = energy_report(system_, r.after).total();
    const auto bump = [](double& slot, double v) { slot = std::max(slot, v); };
    bump(case_.max_increase, e1 - e0);
    bump(case_.max_step1_increase, eh - e0);
    bump(case_.max_step2_increase, e1 - eh);
    const auto balance = step1_energy_balance(system_, r.before, r.half, case_.dt);
    if (balance.resolvable()) {
      bump(case_.max_identity_residual, balance.relative_residual());
      ++case_.identity_steps;
    }
    ++case_.steps;
  }

 private:
  const CoupledSystem& system_;
  StabilityCase& case_;
};

}  // namespace

std::vector<StabilityCase> stability_study(const ParamSet& p, const StabilityOptions& options) {
  if (options.dts.empty()) throw std::invalid_argument("stability_study: empty time-step list");
  const Problem problem = build_example(p, {1, false, options.nx, options.ny, Forcing::None});
  std::vector<StabilityCase> out;
  for (double dt : options.dts) {
    StabilityCase c;
    c.dt = dt;
    c.max_increase = c.max_step1_increase = c.max_step2_increase = -INFINITY;
    SplittingScheme scheme(problem.system, options.scheme);
    StabilityObserver observer(problem.system, c);
    scheme.run(exact_state(problem.system, *problem.exact, 0.0), {dt, options.substeps}, options.steps, {&observer});
    out.push_back(c);
  }
  return out;
}

}  // namespace stokes0d
