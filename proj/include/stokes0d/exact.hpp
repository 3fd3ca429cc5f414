#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "stokes0d/circuit.hpp"
#include "stokes0d/mesh.hpp"
#include "stokes0d/params.hpp"
#include "stokes0d/sparse.hpp"

namespace stokes0d {

/// c0 + cs sin(w t) + cc cos(w t).
struct Sinusoid {
  double c0 = 0.0;
  double cs = 0.0;
  double cc = 0.0;
  double w = 0.0;

  double operator()(double t) const;
  Sinusoid derivative() const;

  friend Sinusoid operator+(const Sinusoid& a, const Sinusoid& b);
  friend Sinusoid operator-(const Sinusoid& a, const Sinusoid& b);
  friend Sinusoid operator*(double c, const Sinusoid& a);
};

/// Body force contribution coefficient(t) * shape(x); the full force is the
/// sum over a domain's terms.
struct ForceTerm {
  std::function<double(double)> coefficient;
  std::function<Point(Point)> shape;
};

/// Channel flow of one domain: v = [s(t) V(y), 0], p = s(t) (a0 + a1 e^{-k x}).
struct ExactDomain {
  Sinusoid amplitude;
  double a0 = 0.0;
  double a1 = 0.0;
  std::optional<Side> external_side;  // side carrying the prescribed traction
};

struct ExactInterface {
  InterfaceId id;
  std::size_t domain = 0;  // 0-based
  Side side = Side::Right;
  double resistance = 0.0;
};

/// Closed-form periodic solution of a benchmark problem, with the forcing
/// (body force, external pressure, generators) that produces it.
class ExactSolution {
 public:
  ExactSolution(const ParamSet& p, std::vector<ExactDomain> domains, std::vector<ExactInterface> interfaces,
                std::function<Vector(double)> state, std::function<Vector(double)> state_dt,
                std::vector<TimeSignal> generators);

  std::size_t num_domains() const { return domains_.size(); }
  const std::vector<ExactDomain>& domains() const { return domains_; }
  const std::vector<ExactInterface>& interfaces() const { return interfaces_; }
  double period() const;

  double amplitude(std::size_t domain, double t) const;
  Point velocity(std::size_t domain, Point x, double t) const;
  Point velocity_dt(std::size_t domain, Point x, double t) const;
  double pressure(std::size_t domain, Point x, double t) const;
  Point body_force(std::size_t domain, Point x, double t) const;
  std::vector<ForceTerm> force_terms(std::size_t domain) const;
  /// Zero when the domain has no traction side.
  double external_pressure(std::size_t domain, double t) const;

  Vector circuit_state(double t) const { return state_(t); }
  Vector circuit_state_dt(double t) const { return state_dt_(t); }

  /// Interface pressure, outward flow rate and node pressure P - R Q.
  double interface_pressure(const InterfaceId& id, double t) const;
  double interface_flow(const InterfaceId& id, double t) const;
  double interface_pi(const InterfaceId& id, double t) const;
  const ExactInterface& interface(const InterfaceId& id) const;

  const std::vector<TimeSignal>& generators() const { return generators_; }

 private:
  const ExactDomain& dom(std::size_t l) const;
  double profile_velocity(double y) const;
  double profile_pressure(const ExactDomain& d, double x) const;
  double side_pressure(const ExactDomain& d, Side side) const;

  ParamSet p_;
  std::vector<ExactDomain> domains_;
  std::vector<ExactInterface> interfaces_;
  std::function<Vector(double)> state_;
  std::function<Vector(double)> state_dt_;
  std::vector<TimeSignal> generators_;
};

using ExactPtr = std::shared_ptr<const ExactSolution>;

/// Single channel, traction on the left, circuit on the right. Without
/// `nonlinear` R_a and C_a take their constant values.
ExactPtr example1_exact(const ParamSet& p, bool nonlinear);
/// Two channels sharing one circuit; the second channel's flow is driven
/// back through its left side.
ExactPtr example2_exact(const ParamSet& p);
/// Single channel closed by one circuit on both sides.
ExactPtr example3_exact(const ParamSet& p);

/// Volume of the first benchmark circuit from the volume-pressure relation.
/// Throws std::domain_error when the square root argument is negative.
double example1_volume(const ParamSet& p, bool nonlinear, double pi, double q, double dpi);

}  // namespace stokes0d
