#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "stokes0d/circuit.hpp"

using namespace stokes0d;

namespace {

double energy(const CircuitSpec& c, const Vector& y, double t) {
  return 0.5 * (c.U(y, t).array() * y.array() * y.array()).sum();
}

CircuitSpec scalar_decay(double rate) {
  CircuitSpec c;
  c.name = "decay";
  c.dimension = 1;
  c.state_names = {"x"};
  c.A = [rate](const Vector&, double) { return DenseMatrix::Constant(1, 1, -rate); };
  c.U = [](const Vector&, double) { return Vector(Vector::Ones(1)); };
  c.source = [](const Vector&, double) { return Vector(Vector::Zero(1)); };
  return c;
}

}  // namespace

TEST(Circuit, Example1ConstantMatrices) {
  const ParamSet p;
  const auto c = example1_circuit(p, false);
  const Vector y = Vector::Zero(2);
  const auto a = c.A(y, 0.0);
  EXPECT_DOUBLE_EQ(a(0, 0), -100.0);
  EXPECT_DOUBLE_EQ(a(0, 1), 1e4);
  EXPECT_DOUBLE_EQ(a(1, 0), 0.1);
  EXPECT_DOUBLE_EQ(a(1, 1), -20.0);

  DenseMatrix expected(2, 2);
  expected << 0.1, -10.0, -10.0, 2000.0;
  const auto b = eval_B(c, y, 0.0, 1e-6);
  EXPECT_LT((b - expected).cwiseAbs().maxCoeff(), 1e-12);
  const Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(b);
  EXPECT_GT(eig.eigenvalues().minCoeff(), 0.0);
}

TEST(Circuit, Example1NonlinearLaws) {
  const ParamSet p;
  EXPECT_DOUBLE_EQ(example1_resistance(p, true, 0.0), 15.0);
  EXPECT_DOUBLE_EQ(example1_resistance(p, false, 123.0), 10.0);
  EXPECT_DOUBLE_EQ(example1_capacitance(p, true, 1.0), 0.005);
  EXPECT_DOUBLE_EQ(example1_capacitance(p, false, 1.0), 0.01);
}

TEST(Circuit, Example2And3Matrices) {
  const ParamSet p;
  const auto a2 = example2_circuit(p).A(Vector::Zero(3), 0.0);
  EXPECT_NEAR(a2(2, 0), 1000.0 / 3.0, 1e-10);
  EXPECT_DOUBLE_EQ(a2(0, 2), -1000.0);
  const auto a3 = example3_circuit(p).A(Vector::Zero(3), 0.0);
  EXPECT_DOUBLE_EQ(a3(0, 0), -100.0);
  EXPECT_NEAR(a3(2, 2), -70.0 / 0.003, 1e-8);
}

TEST(Circuit, BPositiveSemidefiniteForLinearCircuits) {
  const ParamSet p;
  for (const auto& c : {example2_circuit(p), example3_circuit(p)}) {
    const auto b = eval_B(c, Vector::Zero(3), 0.0, 1e-6);
    const DenseMatrix sym = 0.5 * (b + b.transpose());
    const Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(sym);
    EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-9 * eig.eigenvalues().cwiseAbs().maxCoeff()) << c.name;
  }
}

TEST(Circuit, FiniteDifferenceBMatchesAnalyticForConstantU) {
  ParamSet p;
  auto c = example1_circuit(p, false);
  const Vector y = (Vector(2) << 900.0, 2.0).finished();
  const auto analytic = eval_B(c, y, 0.3, 1e-6);
  c.dU_dt = nullptr;
  EXPECT_LT((eval_B(c, y, 0.3, 1e-6) - analytic).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Circuit, CouplingPlacesFlowOverCapacitance) {
  const ParamSet p;
  const auto c = example2_circuit(p);
  const Vector b = c.coupling({2.0, -3.0});
  EXPECT_DOUBLE_EQ(b[0], 2000.0);
  EXPECT_DOUBLE_EQ(b[1], -3000.0);
  EXPECT_DOUBLE_EQ(b[2], 0.0);
  EXPECT_THROW(c.coupling({1.0}), std::invalid_argument);
}

TEST(Circuit, ScalarImplicitEulerStep) {
  const auto c = scalar_decay(10.0);
  const auto out = step2_integrate(c, {Vector::Ones(1), 0.0}, 0.01, 1);
  EXPECT_NEAR(out.y[0], 1.0 / 1.1, 1e-15);
  EXPECT_DOUBLE_EQ(out.t, 0.01);
  const auto two = step2_integrate(c, {Vector::Ones(1), 0.0}, 0.01, 2);
  EXPECT_NEAR(two.y[0], 1.0 / (1.1 * 1.1), 1e-15);
}

TEST(Circuit, GroundedCircuitEnergyDecays) {
  const ParamSet p;
  for (bool nonlinear : {false, true}) {
    const auto c = example1_circuit(p, nonlinear);
    CircuitState s{(Vector(2) << 1000.0, 5.0).finished(), 0.0};
    double e = energy(c, s.y, s.t);
    for (int n = 0; n < 50; ++n) {
      s = step2_integrate(c, s, 0.01, 5);
      const double next = energy(c, s.y, s.t);
      EXPECT_LE(next, e);
      e = next;
    }
  }
}

TEST(Circuit, FreezeModesAgreeForLinearCircuits) {
  const ParamSet p;
  const auto c = example3_circuit(p);
  const CircuitState s{(Vector(3) << 100.0, -50.0, 3.0).finished(), 0.0};
  const auto a = step2_integrate(c, s, 1e-3, 10, CoefficientFreeze::SubstepStart);
  const auto b = step2_integrate(c, s, 1e-3, 10, CoefficientFreeze::StepStart);
  EXPECT_LT((a.y - b.y).norm(), 1e-12 * a.y.norm());
}

TEST(Circuit, ValidateRejectsInconsistentSpecs) {
  const ParamSet p;
  auto c = example1_circuit(p, true);
  EXPECT_NO_THROW(c.validate());
  c.connections.front().pi_index = 7;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = example1_circuit(p, true);
  c.connections.front().capacitance = 0.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = example1_circuit(p, true);
  c.A = nullptr;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Circuit, StepRejectsBadArguments) {
  const auto c = scalar_decay(1.0);
  EXPECT_THROW(step2_integrate(c, {Vector::Ones(1), 0.0}, 0.0, 1), std::invalid_argument);
  EXPECT_THROW(step2_integrate(c, {Vector::Ones(1), 0.0}, 0.1, 0), std::invalid_argument);
  EXPECT_THROW(step2_integrate(c, {Vector::Ones(2), 0.0}, 0.1, 1), std::invalid_argument);
}

TEST(Circuit, SingularStepThrows) {
  // I - dt2 A = 0 for A = 1/dt2.
  const auto c = scalar_decay(-10.0);
  EXPECT_THROW(step2_integrate(c, {Vector::Ones(1), 0.0}, 0.1, 1), std::runtime_error);
}
