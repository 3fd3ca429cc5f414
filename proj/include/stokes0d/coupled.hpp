#pragma once

#include <cstddef>
#include <vector>

#include "stokes0d/circuit.hpp"
#include "stokes0d/exact.hpp"
#include "stokes0d/mesh.hpp"
#include "stokes0d/sparse.hpp"
#include "stokes0d/stokes_fem.hpp"

namespace stokes0d {

struct FluidProperties {
  double rho = 1.0;  // g cm^-3
  double mu = 1.0;   // g cm^-1 s^-1
};

/// One Stokes domain with its assembled operators and forcing. The body
/// force per unit mass is sum_j coefficient_j(t) shape_j(x); the loads of the
/// shapes are assembled once.
class Domain {
 public:
  Domain(TriangleMesh mesh, std::vector<ForceTerm> force_terms, TimeSignal external_pressure);

  const TriangleMesh& mesh() const { return mesh_; }
  const StokesSpace& space() const { return space_; }
  const AssembledOperators& ops() const { return ops_; }
  bool has_external_pressure() const { return static_cast<bool>(external_pressure_); }

  /// int f(., t) . phi_i (per unit mass).
  Vector body_force(double t) const;
  double external_pressure(double t) const;
  bool forced() const { return !terms_.empty(); }

 private:
  TriangleMesh mesh_;
  StokesSpace space_;
  AssembledOperators ops_;
  std::vector<ForceTerm> terms_;
  std::vector<Vector> term_loads_;
  TimeSignal external_pressure_;
};

/// Interface S_k of domain `domain` attached to connection `connection` of
/// circuit `circuit` (all 0-based).
struct InterfaceBinding {
  InterfaceId id;
  std::size_t domain = 0;
  std::size_t circuit = 0;
  std::size_t connection = 0;
};

struct CoupledSystem {
  FluidProperties fluid;
  std::vector<Domain> domains;
  std::vector<CircuitSpec> circuits;
  std::vector<InterfaceBinding> bindings;

  /// Every mesh interface and every circuit connection bound exactly once,
  /// with matching ids. Throws std::invalid_argument otherwise.
  void validate() const;
  const Connection& connection(const InterfaceBinding& b) const;
  const Vector& flux_vector(const InterfaceBinding& b) const;
  std::size_t binding_index(const InterfaceId& id) const;
};

struct InterfaceValues {
  double P = 0.0;
  double Q = 0.0;
  double pi = 0.0;
};

/// Velocities carry every dof (wall entries stay zero). Interface values are
/// aligned with CoupledSystem::bindings.
struct CoupledState {
  std::vector<Vector> velocity;
  std::vector<Vector> pressure;
  std::vector<Vector> circuits;
  std::vector<InterfaceValues> interfaces;
  double t = 0.0;
};

CoupledState zero_state(const CoupledSystem& system);

/// Interpolated exact fields and exact circuit/interface values at time t.
CoupledState exact_state(const CoupledSystem& system, const ExactSolution& exact, double t);

/// Throws std::invalid_argument when sizes disagree with the system.
void check_state(const CoupledSystem& system, const CoupledState& state);

}  // namespace stokes0d
