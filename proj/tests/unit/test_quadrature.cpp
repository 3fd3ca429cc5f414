#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "stokes0d/quadrature.hpp"

using namespace stokes0d;

namespace {

double factorial(int n) { return std::tgamma(n + 1.0); }

// int over the unit reference triangle of x^a y^b.
double monomial(int a, int b) { return factorial(a) * factorial(b) / factorial(a + b + 2); }

}  // namespace

class TriangleRuleTest : public ::testing::TestWithParam<int> {};

TEST_P(TriangleRuleTest, ExactForMonomialsUpToDegree) {
  const int degree = GetParam();
  const auto& rule = triangle_rule(degree);
  EXPECT_GE(rule.degree, degree);
  EXPECT_NEAR(std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0), 1.0, 1e-14);
  for (int a = 0; a <= degree; ++a) {
    for (int b = 0; a + b <= degree; ++b) {
      double sum = 0.0;
      for (std::size_t q = 0; q < rule.points.size(); ++q) {
        sum += rule.weights[q] * std::pow(rule.points[q][1], a) * std::pow(rule.points[q][2], b);
      }
      EXPECT_NEAR(0.5 * sum, monomial(a, b), 1e-14) << "x^" << a << " y^" << b;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Degrees, TriangleRuleTest, ::testing::Values(1, 2, 4, 6));

TEST(TriangleRule, BarycentricPointsSumToOne) {
  for (const auto& p : triangle_rule(6).points) EXPECT_NEAR(p[0] + p[1] + p[2], 1.0, 1e-15);
}

TEST(TriangleRule, RejectsUnsupportedDegree) { EXPECT_THROW(triangle_rule(9), std::invalid_argument); }

TEST(GaussLegendre, ExactUpToDegree2nMinus1) {
  for (int n = 1; n <= 12; ++n) {
    const auto r = gauss_legendre(n);
    ASSERT_EQ(r.points.size(), static_cast<std::size_t>(n));
    for (int d = 0; d <= 2 * n - 1; ++d) {
      double sum = 0.0;
      for (int q = 0; q < n; ++q) sum += r.weights[q] * std::pow(r.points[q], d);
      EXPECT_NEAR(sum, 1.0 / (d + 1), 1e-14) << "n=" << n << " d=" << d;
    }
  }
  EXPECT_THROW(gauss_legendre(0), std::invalid_argument);
}
