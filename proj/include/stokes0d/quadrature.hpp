#pragma once

#include <array>
#include <vector>

namespace stokes0d {

/// Quadrature on the reference triangle in barycentric coordinates.
/// Weights sum to one; multiply by the element area.
struct TriangleRule {
  std::vector<std::array<double, 3>> points;
  std::vector<double> weights;
  int degree = 0;
};

/// Symmetric rules exact up to the requested polynomial degree (1, 2, 4 or 6).
const TriangleRule& triangle_rule(int degree);

/// Gauss-Legendre nodes/weights mapped to [0, 1] (weights sum to one).
struct LineRule {
  std::vector<double> points;
  std::vector<double> weights;
};

LineRule gauss_legendre(int n);

}  // namespace stokes0d
