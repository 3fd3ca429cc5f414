#include <gtest/gtest.h>

#include "stokes0d/verify.hpp"

using namespace stokes0d;

namespace {

struct Case {
  int example;
  bool nonlinear;
};

}  // namespace

class OracleTest : public ::testing::TestWithParam<Case> {};

TEST_P(OracleTest, ExactSolutionIsSelfConsistent) {
  const auto c = GetParam();
  const auto report = verify_oracle(ParamSet{}, {c.example, c.nonlinear, 100, 20});
  for (const auto& check : report.checks) {
    EXPECT_TRUE(check.passed) << check.name << " = " << check.value << " > " << check.threshold;
  }
  EXPECT_LE(report.find("circuit_ode").value, 1e-10);
  EXPECT_LE(report.find("interface_relation").value, 1e-10);
  EXPECT_LE(report.find("discrete_divergence").value, 1e-10);
  EXPECT_THROW(report.find("no_such_check"), std::out_of_range);
}

INSTANTIATE_TEST_SUITE_P(Examples, OracleTest,
                         ::testing::Values(Case{1, true}, Case{1, false}, Case{2, false}, Case{3, false}),
                         [](const auto& info) {
                           return "Example" + std::to_string(info.param.example) +
                                  (info.param.nonlinear ? "Nonlinear" : "");
                         });

TEST(Oracle, ExampleSpecificChecks) {
  EXPECT_LE(verify_oracle(ParamSet{}, {1, true, 100, 20}).find("volume_pressure").value, 1e-10);
  EXPECT_LE(verify_oracle(ParamSet{}, {3, false, 100, 20}).find("inductor_ode").value, 1e-10);
}

TEST(Oracle, UnforcedSystemIsNotSolvedByExactSolution) {
  ExampleOptions o{1, true, 100, 20, Forcing::None};
  const auto report = verify_oracle(ParamSet{}, o);
  EXPECT_FALSE(report.passed());
  EXPECT_FALSE(report.find("circuit_ode").passed);
}

TEST(Oracle, CorruptedParameterIsNamed) {
  ParamSet p;
  p.R11_1 = -10.0;
  const auto report = verify_oracle(p, {1, true, 100, 20});
  EXPECT_FALSE(report.passed());
  const auto& c = report.find("parameter_positivity");
  EXPECT_FALSE(c.passed);
  EXPECT_NE(c.detail.find("R11_1"), std::string::npos);
}

TEST(Oracle, WeakResidualShrinksWithMesh) {
  const auto coarse = verify_oracle(ParamSet{}, {1, true, 25, 5}).find("stokes_weak_residual").value;
  const auto fine = verify_oracle(ParamSet{}, {1, true, 50, 10}).find("stokes_weak_residual").value;
  EXPECT_GT(coarse / fine, 3.0);
}
