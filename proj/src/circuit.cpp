#include "stokes0d/circuit.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include <Eigen/LU>

namespace stokes0d {

void CircuitSpec::validate() const {
  if (dimension == 0) throw std::invalid_argument("circuit '" + name + "': zero dimension");
  if (!A || !U || !source) throw std::invalid_argument("circuit '" + name + "': missing coefficient evaluator");
  if (!state_names.empty() && state_names.size() != dimension) {
    throw std::invalid_argument("circuit '" + name + "': state name count does not match dimension");
  }
  std::set<std::size_t> used;
  for (const auto& c : connections) {
    if (!(c.resistance > 0.0) || !(c.capacitance > 0.0)) {
      throw std::invalid_argument("circuit '" + name + "': connection " + c.interface.label() +
                                  " needs positive R and C");
    }
    if (c.pi_index >= dimension || !used.insert(c.pi_index).second) {
      throw std::invalid_argument("circuit '" + name + "': connection " + c.interface.label() +
                                  " has an invalid or repeated pi index");
    }
  }
}

Vector CircuitSpec::coupling(const std::vector<double>& flows) const {
  if (flows.size() != connections.size()) throw std::invalid_argument("CircuitSpec::coupling: one flow per connection");
  Vector b = Vector::Zero(static_cast<Eigen::Index>(dimension));
  for (std::size_t k = 0; k < connections.size(); ++k) {
    b[static_cast<Eigen::Index>(connections[k].pi_index)] += flows[k] / connections[k].capacitance;
  }
  return b;
}

DenseMatrix eval_B(const CircuitSpec& spec, const Vector& y, double t, double dt_fd, const std::optional<Vector>& ydot) {
  const DenseMatrix a = spec.A(y, t);
  const Vector u = spec.U(y, t);
  DenseMatrix b = -(u.asDiagonal() * a);
  Vector du;
  if (spec.dU_dt) {
    du = spec.dU_dt(y, t);
  } else {
    if (!(dt_fd > 0.0)) throw std::invalid_argument("eval_B: finite-difference step must be positive");
    const Vector rate = ydot ? *ydot : Vector(a * y + spec.source(y, t));
    du = (spec.U(y + dt_fd * rate, t + dt_fd) - spec.U(y - dt_fd * rate, t - dt_fd)) / (2.0 * dt_fd);
  }
  b.diagonal() -= 0.5 * du;
  return b;
}

CircuitState step2_integrate(const CircuitSpec& spec, const CircuitState& state, double dt2, int n_sub,
                             CoefficientFreeze freeze) {
  if (!(dt2 > 0.0)) throw std::invalid_argument("step2_integrate: dt2 must be positive");
  if (n_sub < 1) throw std::invalid_argument("step2_integrate: substep count must be positive");
  const auto n = static_cast<Eigen::Index>(spec.dimension);
  if (state.y.size() != n) throw std::invalid_argument("step2_integrate: state size mismatch");

  CircuitState out = state;
  const Vector y_start = state.y;
  for (int k = 0; k < n_sub; ++k) {
    const double t_new = state.t + (k + 1) * dt2;
    const Vector& frozen = (freeze == CoefficientFreeze::SubstepStart) ? out.y : y_start;
    const DenseMatrix a = spec.A(frozen, t_new);
    const Vector s = spec.source(frozen, t_new);
    const DenseMatrix system = DenseMatrix::Identity(n, n) - dt2 * a;
    Eigen::FullPivLU<DenseMatrix> lu(system);
    if (!lu.isInvertible()) {
      throw std::runtime_error("step2_integrate: singular implicit-Euler matrix in circuit '" + spec.name + "'");
    }
    out.y = lu.solve(Vector(out.y + dt2 * s));
    out.t = t_new;
  }
  return out;
}

double example1_resistance(const ParamSet& p, bool nonlinear, double pi) {
  if (!nonlinear) return p.Ra_bar;
  return p.Ra_bar + p.alpha0 / (1.0 + p.alpha1 * std::exp(-p.alpha2 * pi));
}

double example1_capacitance(const ParamSet& p, bool nonlinear, double volume) {
  if (!nonlinear) return p.Ca_bar;
  return p.Ca_bar / (1.0 + p.gamma1 * volume);
}

CircuitSpec example1_circuit(const ParamSet& p, bool nonlinear, TimeSignal generator) {
  CircuitSpec c;
  c.name = nonlinear ? "example1-nonlinear" : "example1";
  c.dimension = 2;
  c.state_names = {"pi11_1", "omega11"};
  c.A = [p, nonlinear](const Vector& y, double) {
    const double ra = example1_resistance(p, nonlinear, y[0]);
    const double ca = example1_capacitance(p, nonlinear, y[1]);
    DenseMatrix a(2, 2);
    a << -1.0 / (ra * p.C11_1), 1.0 / (ra * p.C11_1 * ca),
        1.0 / ra, -1.0 / (ra * ca) - 1.0 / (p.Rb * ca);
    return a;
  };
  c.U = [p, nonlinear](const Vector& y, double) {
    Vector u(2);
    u << p.C11_1, 1.0 / example1_capacitance(p, nonlinear, y[1]);
    return u;
  };
  c.source = [p, generator](const Vector&, double t) {
    Vector s = Vector::Zero(2);
    if (generator) s[1] = generator(t) / p.Rb;
    return s;
  };
  if (!nonlinear) c.dU_dt = [](const Vector&, double) { return Vector(Vector::Zero(2)); };
  c.connections = {{p.R11_1, p.C11_1, 0, {1, 1, 1}}};
  return c;
}

CircuitSpec example2_circuit(const ParamSet& p, TimeSignal generator) {
  CircuitSpec c;
  c.name = "example2";
  c.dimension = 3;
  c.state_names = {"pi11_1", "pi21_1", "omega11"};
  DenseMatrix a(3, 3);
  a << 0.0, 0.0, -1.0 / p.C11_1,
      0.0, -1.0 / (p.C21_1 * p.Rb), 1.0 / p.C21_1,
      1.0 / p.La, -1.0 / p.La, -p.Ra / p.La;
  c.A = [a](const Vector&, double) { return a; };
  Vector u(3);
  u << p.C11_1, p.C21_1, p.La;
  c.U = [u](const Vector&, double) { return u; };
  c.dU_dt = [](const Vector&, double) { return Vector(Vector::Zero(3)); };
  c.source = [p, generator](const Vector&, double t) {
    Vector s = Vector::Zero(3);
    if (generator) s[1] = generator(t) / (p.C21_1 * p.Rb);
    return s;
  };
  c.connections = {{p.R11_1, p.C11_1, 0, {1, 1, 1}}, {p.R21_1, p.C21_1, 1, {2, 1, 1}}};
  return c;
}

CircuitSpec example3_circuit(const ParamSet& p, TimeSignal generator_a, TimeSignal generator_b) {
  CircuitSpec c;
  c.name = "example3";
  c.dimension = 3;
  c.state_names = {"pi11_1", "pi11_2", "omega11"};
  DenseMatrix a(3, 3);
  a << -1.0 / (p.Ra * p.C11_1), 0.0, -1.0 / p.C11_1,
      0.0, -1.0 / (p.Rb * p.C11_2), 1.0 / p.C11_2,
      1.0 / p.Lc, -1.0 / p.Lc, -p.Rc / p.Lc;
  c.A = [a](const Vector&, double) { return a; };
  Vector u(3);
  u << p.C11_1, p.C11_2, p.Lc;
  c.U = [u](const Vector&, double) { return u; };
  c.dU_dt = [](const Vector&, double) { return Vector(Vector::Zero(3)); };
  c.source = [p, generator_a, generator_b](const Vector&, double t) {
    Vector s = Vector::Zero(3);
    if (generator_a) s[0] = generator_a(t) / (p.Ra * p.C11_1);
    if (generator_b) s[1] = generator_b(t) / (p.Rb * p.C11_2);
    return s;
  };
  c.connections = {{p.R11_1, p.C11_1, 0, {1, 1, 1}}, {p.R11_2, p.C11_2, 1, {1, 1, 2}}};
  return c;
}

}  // namespace stokes0d
