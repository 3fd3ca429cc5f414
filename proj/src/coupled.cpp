#include "stokes0d/coupled.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace stokes0d {

Domain::Domain(TriangleMesh mesh, std::vector<ForceTerm> force_terms, TimeSignal external_pressure)
    : mesh_(std::move(mesh)),
      space_(mesh_),
      ops_(assemble_operators(space_, mesh_)),
      terms_(std::move(force_terms)),
      external_pressure_(std::move(external_pressure)) {
  for (const auto& term : terms_) {
    if (!term.coefficient || !term.shape) throw std::invalid_argument("Domain: incomplete force term");
    const auto shape = term.shape;
    term_loads_.push_back(assemble_body_force(space_, mesh_, [shape](Point x, double) { return shape(x); }, 0.0));
  }
}

Vector Domain::body_force(double t) const {
  Vector f = Vector::Zero(static_cast<Eigen::Index>(space_.velocity_dofs()));
  for (std::size_t j = 0; j < terms_.size(); ++j) f += terms_[j].coefficient(t) * term_loads_[j];
  return f;
}

double Domain::external_pressure(double t) const { return external_pressure_ ? external_pressure_(t) : 0.0; }

void CoupledSystem::validate() const {
  if (!(fluid.rho > 0.0) || !(fluid.mu > 0.0)) throw std::invalid_argument("CoupledSystem: rho and mu must be positive");
  for (const auto& c : circuits) c.validate();

  std::set<InterfaceId> seen;
  std::set<std::pair<std::size_t, std::size_t>> used;
  for (const auto& b : bindings) {
    if (b.domain >= domains.size()) throw std::invalid_argument("CoupledSystem: " + b.id.label() + " on unknown domain");
    if (b.circuit >= circuits.size() || b.connection >= circuits[b.circuit].connections.size()) {
      throw std::invalid_argument("CoupledSystem: " + b.id.label() + " on unknown circuit connection");
    }
    if (!seen.insert(b.id).second) throw std::invalid_argument("CoupledSystem: " + b.id.label() + " bound twice");
    if (!used.insert({b.circuit, b.connection}).second) {
      throw std::invalid_argument("CoupledSystem: connection of " + b.id.label() + " bound twice");
    }
    if (connection(b).interface != b.id) {
      throw std::invalid_argument("CoupledSystem: " + b.id.label() + " bound to connection " +
                                  connection(b).interface.label());
    }
    if (!domains[b.domain].ops().interface_flux.contains(b.id)) {
      throw std::invalid_argument("CoupledSystem: " + b.id.label() + " is not on the boundary of its domain");
    }
  }
  for (const auto& d : domains) {
    for (const auto& id : d.mesh().interfaces()) {
      if (!seen.contains(id)) throw std::invalid_argument("CoupledSystem: interface " + id.label() + " is unbound");
    }
  }
  std::size_t connections = 0;
  for (const auto& c : circuits) connections += c.connections.size();
  if (connections != bindings.size()) throw std::invalid_argument("CoupledSystem: unbound circuit connection");
}

const Connection& CoupledSystem::connection(const InterfaceBinding& b) const {
  return circuits.at(b.circuit).connections.at(b.connection);
}

const Vector& CoupledSystem::flux_vector(const InterfaceBinding& b) const {
  return domains.at(b.domain).ops().interface_flux.at(b.id);
}

std::size_t CoupledSystem::binding_index(const InterfaceId& id) const {
  for (std::size_t k = 0; k < bindings.size(); ++k) {
    if (bindings[k].id == id) return k;
  }
  throw std::out_of_range("CoupledSystem: no binding for " + id.label());
}

CoupledState zero_state(const CoupledSystem& system) {
  CoupledState s;
  for (const auto& d : system.domains) {
    s.velocity.push_back(Vector::Zero(static_cast<Eigen::Index>(d.space().velocity_dofs())));
    s.pressure.push_back(Vector::Zero(static_cast<Eigen::Index>(d.space().pressure_dofs())));
  }
  for (const auto& c : system.circuits) s.circuits.push_back(Vector::Zero(static_cast<Eigen::Index>(c.dimension)));
  s.interfaces.assign(system.bindings.size(), {});
  return s;
}

CoupledState exact_state(const CoupledSystem& system, const ExactSolution& exact, double t) {
  if (exact.num_domains() != system.domains.size()) throw std::invalid_argument("exact_state: domain count mismatch");
  if (system.circuits.size() != 1) throw std::invalid_argument("exact_state: exact solutions carry one circuit");
  CoupledState s;
  s.t = t;
  for (std::size_t l = 0; l < system.domains.size(); ++l) {
    const auto& d = system.domains[l];
    Vector v = interpolate_velocity(d.space(), [&](Point x, double tt) { return exact.velocity(l, x, tt); }, t);
    for (std::size_t i = 0; i < d.space().velocity_dofs(); ++i) {
      if (d.space().constrained(i)) v[static_cast<Eigen::Index>(i)] = 0.0;
    }
    s.velocity.push_back(std::move(v));
    s.pressure.push_back(
        interpolate_pressure(d.space(), d.mesh(), [&](Point x, double tt) { return exact.pressure(l, x, tt); }, t));
  }
  s.circuits.push_back(exact.circuit_state(t));
  for (const auto& b : system.bindings) {
    s.interfaces.push_back({exact.interface_pressure(b.id, t), exact.interface_flow(b.id, t), exact.interface_pi(b.id, t)});
  }
  check_state(system, s);
  return s;
}

void check_state(const CoupledSystem& system, const CoupledState& state) {
  const auto fail = [](const std::string& what) { throw std::invalid_argument("CoupledState: " + what); };
  if (state.velocity.size() != system.domains.size() || state.pressure.size() != system.domains.size()) {
    fail("domain count mismatch");
  }
  for (std::size_t l = 0; l < system.domains.size(); ++l) {
    const auto& sp = system.domains[l].space();
    if (static_cast<std::size_t>(state.velocity[l].size()) != sp.velocity_dofs()) fail("velocity size mismatch");
    if (static_cast<std::size_t>(state.pressure[l].size()) != sp.pressure_dofs()) fail("pressure size mismatch");
  }
  if (state.circuits.size() != system.circuits.size()) fail("circuit count mismatch");
  for (std::size_t m = 0; m < system.circuits.size(); ++m) {
    if (static_cast<std::size_t>(state.circuits[m].size()) != system.circuits[m].dimension) fail("circuit size mismatch");
  }
  if (state.interfaces.size() != system.bindings.size()) fail("interface count mismatch");
}

}  // namespace stokes0d
