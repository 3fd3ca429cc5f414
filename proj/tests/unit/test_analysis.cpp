#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "stokes0d/analysis.hpp"
#include "stokes0d/experiments.hpp"
#include "stokes0d/problems.hpp"

using namespace stokes0d;

namespace {

CoupledState scaled(CoupledState s, double c) {
  for (auto& v : s.velocity) v *= c;
  for (auto& p : s.pressure) p *= c;
  for (auto& y : s.circuits) y *= c;
  return s;
}

class SmallProblem : public ::testing::Test {
 protected:
  SmallProblem() : problem(build_example(ParamSet{}, {1, true, 10, 4})) {}

  std::vector<CoupledState> trajectory(double t0, std::size_t n, double dt) const {
    std::vector<CoupledState> out;
    for (std::size_t i = 0; i <= n; ++i) out.push_back(exact_state(problem.system, *problem.exact, t0 + i * dt));
    return out;
  }

  Problem problem;
};

}  // namespace

TEST(ConvergenceRate, RecoversPowerLaws) {
  std::vector<std::pair<double, double>> first, second;
  for (double dt : {0.01, 0.005, 0.001}) {
    first.emplace_back(dt, 3.0 * dt);
    second.emplace_back(dt, 0.5 * dt * dt);
  }
  EXPECT_NEAR(convergence_rate(first), 1.0, 1e-12);
  EXPECT_NEAR(convergence_rate(second), 2.0, 1e-12);
  EXPECT_THROW(convergence_rate({{0.1, 1.0}}), std::invalid_argument);
  EXPECT_THROW(convergence_rate({{0.1, 1.0}, {0.1, 2.0}}), std::invalid_argument);
  EXPECT_THROW(convergence_rate({{0.1, 1.0}, {0.2, 0.0}}), std::invalid_argument);
}

TEST(StepsPerPeriod, RequiresDivisor) {
  EXPECT_EQ(steps_per_period(2.0, 0.01), 200u);
  EXPECT_EQ(steps_per_period(2.0, 0.001), 2000u);
  EXPECT_THROW(steps_per_period(2.0, 0.3), std::invalid_argument);
  EXPECT_THROW(steps_per_period(2.0, 0.0), std::invalid_argument);
}

TEST(EnergyBalance, RelativeResidualAndResolution) {
  EXPECT_DOUBLE_EQ((EnergyBalance{2.0, 1.0}.relative_residual()), 0.5);
  EXPECT_DOUBLE_EQ((EnergyBalance{0.0, 0.0}.relative_residual()), 0.0);
  EXPECT_TRUE((EnergyBalance{1e-200, 1e-200}.resolvable()));
  const double tiny = std::numeric_limits<double>::denorm_min() * 1e6;
  EXPECT_FALSE((EnergyBalance{tiny, tiny}.resolvable()));
}

TEST_F(SmallProblem, PeriodicityGapVanishesForIdenticalPeriods) {
  const auto a = trajectory(0.0, 20, 0.1);
  const auto b = trajectory(2.0, 20, 0.1);
  EXPECT_LT(periodicity_gap(problem.system, a, b), 1e-20);
}

TEST_F(SmallProblem, PeriodicityGapIsScaleInvariant) {
  const auto a = trajectory(0.0, 10, 0.2);
  auto b = trajectory(0.0, 10, 0.2);
  for (auto& s : b) s = scaled(s, 1.1);
  const double gap = periodicity_gap(problem.system, a, b);
  EXPECT_NEAR(gap, 0.01, 1e-12);
  std::vector<CoupledState> a2, b2;
  for (std::size_t i = 0; i < a.size(); ++i) {
    a2.push_back(scaled(a[i], 7.0));
    b2.push_back(scaled(b[i], 7.0));
  }
  EXPECT_NEAR(periodicity_gap(problem.system, a2, b2), gap, 1e-14);
}

TEST_F(SmallProblem, PeriodicityGapRejectsBadInput) {
  const auto a = trajectory(0.0, 4, 0.1);
  std::vector<CoupledState> zeros(a.size(), zero_state(problem.system));
  EXPECT_THROW(periodicity_gap(problem.system, zeros, a), std::domain_error);
  EXPECT_THROW(periodicity_gap(problem.system, a, trajectory(0.0, 3, 0.1)), std::invalid_argument);
}

TEST_F(SmallProblem, MonitorMatchesBatchGap) {
  const double dt = 0.1;
  const std::size_t n = 20;
  PeriodicityMonitor monitor(problem.system, n, 1e-6);
  const auto all = trajectory(0.0, 3 * n, dt);
  // Perturb the third period so the second gap is nonzero.
  std::vector<CoupledState> perturbed = all;
  for (std::size_t i = 2 * n + 1; i <= 3 * n; ++i) perturbed[i] = scaled(all[i], 1.01);
  monitor.start(perturbed[0]);
  for (std::size_t i = 1; i < perturbed.size(); ++i) {
    const StepRecord r{i, perturbed[i - 1], perturbed[i], perturbed[i]};
    monitor.observe(r);
  }
  EXPECT_EQ(monitor.periods_completed(), 3u);
  ASSERT_EQ(monitor.gaps().size(), 2u);
  const std::vector<CoupledState> p1(perturbed.begin(), perturbed.begin() + n + 1);
  const std::vector<CoupledState> p2(perturbed.begin() + n, perturbed.begin() + 2 * n + 1);
  const std::vector<CoupledState> p3(perturbed.begin() + 2 * n, perturbed.end());
  EXPECT_NEAR(monitor.gaps()[0], periodicity_gap(problem.system, p1, p2), 1e-14);
  EXPECT_NEAR(monitor.gaps()[1], periodicity_gap(problem.system, p2, p3), 1e-14);
  EXPECT_FALSE(monitor.done());
}

TEST_F(SmallProblem, ErrorsOfExactTrajectoryAreSmall) {
  const double dt = 0.05;
  const auto traj = trajectory(0.0, 40, dt);
  const auto r = error_norms(problem.system, *problem.exact, traj, dt);
  EXPECT_LT(r.err_y, 1e-12);
  EXPECT_LT(r.err_v, 1e-2);
  EXPECT_LT(r.err_p, 1e-2);
  ASSERT_EQ(r.interfaces.size(), 1u);
  EXPECT_LT(r.interfaces.front().relative_flow_error(), 1e-2);
}

TEST(ErrorNorms, ScaledTrajectoryWithConstantWeights) {
  const auto problem = build_example(ParamSet{}, {1, false, 10, 4});
  const double dt = 0.05;
  std::vector<CoupledState> traj;
  for (std::size_t i = 0; i <= 40; ++i) {
    traj.push_back(scaled(exact_state(problem.system, *problem.exact, i * dt), 1.5));
  }
  const auto r = error_norms(problem.system, *problem.exact, traj, dt);
  // Every sample contributes (0.5)^2; 41 samples share the weight dt.
  EXPECT_NEAR(r.err_y, std::sqrt(dt * 41 * 0.25), 1e-12);
  EXPECT_NEAR(r.err_v, r.err_y, 1e-12);
  EXPECT_NEAR(r.err_p, r.err_y, 1e-12);
}
