#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "stokes0d/mesh.hpp"
#include "stokes0d/params.hpp"
#include "stokes0d/sparse.hpp"

namespace stokes0d {

using DenseMatrix = Eigen::MatrixXd;
using TimeSignal = std::function<double(double)>;

/// Resistive Stokes-circuit connection: resistor R between the interface
/// pressure P and the node pressure pi, which is grounded through C.
struct Connection {
  double resistance = 0.0;   // g cm^-3 s^-1 (2D)
  double capacitance = 0.0;  // g^-1 cm^3 s^2 (2D)
  std::size_t pi_index = 0;  // position of pi within the state vector
  InterfaceId interface;
};

/// Lumped circuit dy/dt = A(y,t) y + s(y,t) + b, where b carries Q/C at the
/// connection rows. U(y,t) is the diagonal energy weight (capacitance for a
/// pressure, inverse capacitance for a volume, inductance for a flow rate).
struct CircuitSpec {
  std::string name;
  std::size_t dimension = 0;
  std::vector<std::string> state_names;
  std::function<DenseMatrix(const Vector& y, double t)> A;
  std::function<Vector(const Vector& y, double t)> U;  // diagonal entries
  std::function<Vector(const Vector& y, double t)> source;
  std::function<Vector(const Vector& y, double t)> dU_dt;  // optional, diagonal entries
  std::vector<Connection> connections;

  /// Throws std::invalid_argument on bad dimensions or connection data.
  void validate() const;
  /// Coupling term b: Q_k / C_k at each connection row, zero elsewhere.
  Vector coupling(const std::vector<double>& flows) const;
};

struct CircuitState {
  Vector y;
  double t = 0.0;
};

/// Which state the explicit nonlinear coefficients see during subcycling.
enum class CoefficientFreeze { SubstepStart, StepStart };

/// B = -U A - 1/2 dU/dt. Without an analytic dU_dt the total derivative is a
/// central difference of U along y' = A y + s (or `ydot` when given) with
/// step dt_fd; constant U gives exactly zero.
DenseMatrix eval_B(const CircuitSpec& spec, const Vector& y, double t, double dt_fd,
                   const std::optional<Vector>& ydot = std::nullopt);

/// n_sub implicit-Euler substeps of dy/dt = A y + s with A, s taken at the
/// frozen state and the new time: (I - dt2 A) y_new = y_hat + dt2 s.
CircuitState step2_integrate(const CircuitSpec& spec, const CircuitState& state, double dt2, int n_sub,
                             CoefficientFreeze freeze = CoefficientFreeze::SubstepStart);

/// y = [pi_11,1, omega_11] (pressure, volume). Without `nonlinear` R_a and C_a
/// are constant; an empty generator means a grounded source.
CircuitSpec example1_circuit(const ParamSet& p, bool nonlinear, TimeSignal generator = {});
/// y = [pi_11,1, pi_21,1, omega_11] (pressures, inductor flow rate).
CircuitSpec example2_circuit(const ParamSet& p, TimeSignal generator = {});
/// y = [pi_11,1, pi_11,2, omega_11] (pressures, inductor flow rate).
CircuitSpec example3_circuit(const ParamSet& p, TimeSignal generator_a = {}, TimeSignal generator_b = {});

/// Nonlinear laws of the first benchmark circuit.
double example1_resistance(const ParamSet& p, bool nonlinear, double pi);
double example1_capacitance(const ParamSet& p, bool nonlinear, double volume);

}  // namespace stokes0d
