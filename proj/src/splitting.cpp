#include "stokes0d/splitting.hpp"

#include <stdexcept>
#include <string>

namespace stokes0d {

void StepConfig::validate() const {
  if (!(dt > 0.0)) throw std::invalid_argument("StepConfig: dt must be positive");
  if (substeps < 1) throw std::invalid_argument("StepConfig: substeps must be at least 1");
}

SplittingScheme::SplittingScheme(const CoupledSystem& system, SchemeOptions options)
    : system_(system), options_(options) {
  system_.validate();
  std::size_t n = 0;
  for (const auto& d : system_.domains) {
    velocity_offset_.push_back(n);
    n += d.space().free_dofs().size();
    pressure_offset_.push_back(n);
    n += d.space().pressure_dofs();
  }
  interface_offset_ = n;
  total_ = n + 2 * system_.bindings.size();
}

SplittingScheme::~SplittingScheme() = default;

void SplittingScheme::prepare(double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("step1: dt must be positive");
  if (factored_dt_ && *factored_dt_ == dt) return;

  const double rho = system_.fluid.rho;
  const double mu = system_.fluid.mu;
  TripletMatrix t(total_, total_);

  for (std::size_t l = 0; l < system_.domains.size(); ++l) {
    const auto& d = system_.domains[l];
    const auto& sp = d.space();
    const auto& ops = d.ops();
    const std::size_t vo = velocity_offset_[l];
    const std::size_t po = pressure_offset_[l];

    const auto add_block = [&](const CompressedMatrix& a, double scale) {
      const auto& off = a.row_offsets();
      for (std::size_t r = 0; r < a.rows(); ++r) {
        const std::size_t fr = sp.free_index(r);
        if (fr == StokesSpace::npos) continue;
        for (std::size_t e = off[r]; e < off[r + 1]; ++e) {
          const std::size_t fc = sp.free_index(a.columns()[e]);
          if (fc != StokesSpace::npos) t.add(vo + fr, vo + fc, scale * a.values()[e]);
        }
      }
    };
    add_block(ops.mass, rho / dt);
    add_block(ops.stiffness, mu);

    const auto& div = ops.divergence;
    for (std::size_t q = 0; q < div.rows(); ++q) {
      for (std::size_t e = div.row_offsets()[q]; e < div.row_offsets()[q + 1]; ++e) {
        const std::size_t fc = sp.free_index(div.columns()[e]);
        if (fc == StokesSpace::npos) continue;
        t.add(vo + fc, po + q, -div.values()[e]);
        t.add(po + q, vo + fc, -div.values()[e]);
      }
    }
  }

  for (std::size_t k = 0; k < system_.bindings.size(); ++k) {
    const auto& b = system_.bindings[k];
    const auto& c = system_.connection(b);
    const auto& sp = system_.domains[b.domain].space();
    const Vector& phi = system_.flux_vector(b);
    const std::size_t vo = velocity_offset_[b.domain];
    const std::size_t iq = interface_offset_ + 2 * k;
    const std::size_t ip = iq + 1;
    for (Eigen::Index r = 0; r < phi.size(); ++r) {
      if (phi[r] == 0.0) continue;
      const std::size_t fr = sp.free_index(static_cast<std::size_t>(r));
      if (fr == StokesSpace::npos) continue;
      t.add(vo + fr, iq, c.resistance * phi[r]);
      if (!options_.explicit_interface_pressure) t.add(vo + fr, ip, phi[r]);
      t.add(iq, vo + fr, -phi[r]);
    }
    t.add(iq, iq, 1.0);
    t.add(ip, ip, 1.0);
    t.add(ip, iq, -dt / c.capacitance);
  }

  try {
    lu_ = std::make_unique<LUFactorization>(compress(t));
  } catch (const std::runtime_error& e) {
    std::string what = "step1: coupled Stokes system with " + std::to_string(system_.domains.size()) +
                       " domain(s) and interfaces";
    for (const auto& b : system_.bindings) what += " " + b.id.label();
    throw std::runtime_error(what + " could not be factorized: " + e.what());
  }
  factored_dt_ = dt;
  ++factorizations_;
}

CoupledState SplittingScheme::step1(const CoupledState& state, double dt) {
  check_state(system_, state);
  prepare(dt);
  const double rho = system_.fluid.rho;
  const double t_new = state.t + dt;

  Vector rhs = Vector::Zero(static_cast<Eigen::Index>(total_));
  std::vector<Vector> momentum;
  for (std::size_t l = 0; l < system_.domains.size(); ++l) {
    const auto& d = system_.domains[l];
    Vector m = (rho / dt) * d.ops().mass.multiply(state.velocity[l]);
    if (d.forced()) m += rho * d.body_force(t_new);
    if (d.has_external_pressure()) m -= d.external_pressure(t_new) * d.ops().neumann_load;
    momentum.push_back(std::move(m));
  }
  for (std::size_t k = 0; k < system_.bindings.size(); ++k) {
    const auto& b = system_.bindings[k];
    const double pi_old = state.circuits[b.circuit][static_cast<Eigen::Index>(system_.connection(b).pi_index)];
    rhs[static_cast<Eigen::Index>(interface_offset_ + 2 * k + 1)] = pi_old;
    if (options_.explicit_interface_pressure) momentum[b.domain] -= pi_old * system_.flux_vector(b);
  }
  for (std::size_t l = 0; l < system_.domains.size(); ++l) {
    const auto& free = system_.domains[l].space().free_dofs();
    for (std::size_t i = 0; i < free.size(); ++i) {
      rhs[static_cast<Eigen::Index>(velocity_offset_[l] + i)] = momentum[l][static_cast<Eigen::Index>(free[i])];
    }
  }

  const Vector x = lu_->solve(rhs);

  CoupledState out = state;
  for (std::size_t l = 0; l < system_.domains.size(); ++l) {
    const auto& sp = system_.domains[l].space();
    Vector v = Vector::Zero(static_cast<Eigen::Index>(sp.velocity_dofs()));
    const auto& free = sp.free_dofs();
    for (std::size_t i = 0; i < free.size(); ++i) {
      v[static_cast<Eigen::Index>(free[i])] = x[static_cast<Eigen::Index>(velocity_offset_[l] + i)];
    }
    out.velocity[l] = std::move(v);
    out.pressure[l] = x.segment(static_cast<Eigen::Index>(pressure_offset_[l]),
                                static_cast<Eigen::Index>(sp.pressure_dofs()));
  }
  for (std::size_t k = 0; k < system_.bindings.size(); ++k) {
    const auto& b = system_.bindings[k];
    const auto& c = system_.connection(b);
    const double q = x[static_cast<Eigen::Index>(interface_offset_ + 2 * k)];
    const double pi = x[static_cast<Eigen::Index>(interface_offset_ + 2 * k + 1)];
    out.interfaces[k] = {pi + c.resistance * q, q, pi};
    out.circuits[b.circuit][static_cast<Eigen::Index>(c.pi_index)] = pi;
  }
  return out;
}

CoupledState SplittingScheme::step2(const CoupledState& half, double dt, int substeps) const {
  StepConfig{dt, substeps}.validate();
  check_state(system_, half);
  CoupledState out = half;
  const double dt2 = dt / substeps;
  for (std::size_t m = 0; m < system_.circuits.size(); ++m) {
    out.circuits[m] = step2_integrate(system_.circuits[m], {half.circuits[m], half.t}, dt2, substeps, options_.freeze).y;
  }
  out.t = half.t + dt;
  return out;
}

CoupledState SplittingScheme::advance(const CoupledState& state, const StepConfig& config) {
  config.validate();
  return step2(step1(state, config.dt), config.dt, config.substeps);
}

CoupledState SplittingScheme::run(CoupledState state, const StepConfig& config, std::size_t n_steps,
                                  const std::vector<StepObserver*>& observers, std::size_t* taken) {
  config.validate();
  if (taken) *taken = 0;
  for (auto* o : observers) o->start(state);
  for (std::size_t n = 1; n <= n_steps; ++n) {
    CoupledState half = step1(state, config.dt);
    CoupledState next = step2(half, config.dt, config.substeps);
    const StepRecord record{n, state, half, next};
    bool stop = false;
    for (auto* o : observers) {
      o->observe(record);
      stop = stop || o->done();
    }
    state = std::move(next);
    if (taken) *taken = n;
    if (stop) break;
  }
  return state;
}

}  // namespace stokes0d
