#include "stokes0d/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace stokes0d {

namespace {

double dot_weighted(const Vector& u, const Vector& a, const Vector& b) { return (u.array() * a.array() * b.array()).sum(); }

// Fields compared between periods: per domain velocity and pressure, then
// per circuit state.
std::vector<Vector> flatten(const CoupledState& s) {
  std::vector<Vector> f;
  for (std::size_t l = 0; l < s.velocity.size(); ++l) {
    f.push_back(s.velocity[l]);
    f.push_back(s.pressure[l]);
  }
  for (const auto& y : s.circuits) f.push_back(y);
  return f;
}

double field_norm2(const CoupledSystem& system, std::size_t field, const Vector& x) {
  const std::size_t nd = 2 * system.domains.size();
  if (field >= nd) return x.squaredNorm();
  const auto& ops = system.domains[field / 2].ops();
  return field % 2 == 0 ? ops.mass.bilinear(x, x) : ops.pressure_mass.bilinear(x, x);
}

double gap_from(const std::vector<FieldGap>& acc) {
  double gap = 0.0;
  for (const auto& g : acc) {
    if (!(g.reference > 0.0)) throw std::domain_error("periodicity gap: previous period has zero norm");
    gap = std::max(gap, g.difference / g.reference);
  }
  return gap;
}

}  // namespace

EnergyReport energy_report(const CoupledSystem& system, const CoupledState& state, double dt_fd) {
  check_state(system, state);
  const double rho = system.fluid.rho;
  EnergyReport r;
  for (std::size_t l = 0; l < system.domains.size(); ++l) {
    const auto& d = system.domains[l];
    const Vector& v = state.velocity[l];
    r.E_omega += 0.5 * rho * d.ops().mass.bilinear(v, v);
    r.D_omega += system.fluid.mu * d.ops().stiffness.bilinear(v, v);
    if (d.forced()) r.F_omega += rho * d.body_force(state.t).dot(v);
    if (d.has_external_pressure()) r.F_omega -= d.external_pressure(state.t) * d.ops().neumann_load.dot(v);
  }
  for (std::size_t m = 0; m < system.circuits.size(); ++m) {
    const auto& c = system.circuits[m];
    const Vector& y = state.circuits[m];
    const Vector u = c.U(y, state.t);
    r.E_ups += 0.5 * dot_weighted(u, y, y);
    r.U_ups += y.dot(eval_B(c, y, state.t, dt_fd) * y);
    r.F_ups += dot_weighted(u, c.source(y, state.t), y);
  }
  for (std::size_t k = 0; k < system.bindings.size(); ++k) {
    const double q = state.interfaces[k].Q;
    r.D_rc += system.connection(system.bindings[k]).resistance * q * q;
  }
  return r;
}

double EnergyBalance::relative_residual() const {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return scale > 0.0 ? std::abs(lhs - rhs) / scale : 0.0;
}

bool EnergyBalance::resolvable() const {
  constexpr double floor = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  return std::max(std::abs(lhs), std::abs(rhs)) >= floor;
}

EnergyBalance step1_energy_balance(const CoupledSystem& system, const CoupledState& before, const CoupledState& half,
                                   double dt) {
  check_state(system, before);
  check_state(system, half);
  if (!(dt > 0.0)) throw std::invalid_argument("step1_energy_balance: dt must be positive");
  const double rho = system.fluid.rho;
  const double t1 = before.t + dt;
  EnergyBalance b;
  for (std::size_t l = 0; l < system.domains.size(); ++l) {
    const auto& d = system.domains[l];
    const Vector& v = half.velocity[l];
    b.lhs += rho * d.ops().mass.bilinear(v, v) / dt + system.fluid.mu * d.ops().stiffness.bilinear(v, v);
    b.rhs += rho * d.ops().mass.bilinear(before.velocity[l], v) / dt;
    if (d.forced()) b.rhs += rho * d.body_force(t1).dot(v);
    if (d.has_external_pressure()) b.rhs -= d.external_pressure(t1) * d.ops().neumann_load.dot(v);
  }
  for (std::size_t m = 0; m < system.circuits.size(); ++m) {
    const Vector& y = half.circuits[m];
    const Vector u = system.circuits[m].U(y, t1);
    b.lhs += dot_weighted(u, y, y) / dt;
    b.rhs += dot_weighted(u, before.circuits[m], y) / dt;
  }
  for (std::size_t k = 0; k < system.bindings.size(); ++k) {
    const double q = half.interfaces[k].Q;
    b.lhs += system.connection(system.bindings[k]).resistance * q * q;
  }
  return b;
}

double periodicity_gap(const CoupledSystem& system, const std::vector<CoupledState>& previous,
                       const std::vector<CoupledState>& current) {
  if (previous.size() != current.size() || previous.size() < 2) {
    throw std::invalid_argument("periodicity_gap: periods must hold the same number (>= 2) of snapshots");
  }
  std::vector<FieldGap> acc;
  for (std::size_t n = 0; n < previous.size(); ++n) {
    const auto a = flatten(previous[n]);
    const auto b = flatten(current[n]);
    if (a.size() != b.size()) throw std::invalid_argument("periodicity_gap: snapshot layout mismatch");
    acc.resize(a.size());
    for (std::size_t f = 0; f < a.size(); ++f) {
      acc[f].difference += field_norm2(system, f, b[f] - a[f]);
      acc[f].reference += field_norm2(system, f, a[f]);
    }
  }
  return gap_from(acc);
}

PeriodicityMonitor::PeriodicityMonitor(const CoupledSystem& system, std::size_t steps_per_period,
                                       std::optional<double> threshold)
    : system_(system), steps_(steps_per_period), threshold_(threshold) {
  if (steps_ == 0) throw std::invalid_argument("PeriodicityMonitor: steps per period must be positive");
}

void PeriodicityMonitor::start(const CoupledState& state) {
  previous_.assign(steps_ + 1, {});
  previous_[0] = flatten(state);
  accum_.assign(previous_[0].size(), {});
  index_ = 1;
  periods_ = 0;
  have_previous_ = false;
  gaps_.clear();
}

void PeriodicityMonitor::observe(const StepRecord& record) { push(record.after); }

void PeriodicityMonitor::push(const CoupledState& state) {
  if (previous_.empty()) throw std::logic_error("PeriodicityMonitor: start() not called");
  auto f = flatten(state);
  const auto compare = [&](std::size_t slot) {
    if (!have_previous_) return;
    for (std::size_t i = 0; i < f.size(); ++i) {
      accum_[i].difference += field_norm2(system_, i, f[i] - previous_[slot][i]);
      accum_[i].reference += field_norm2(system_, i, previous_[slot][i]);
    }
  };
  compare(index_);
  previous_[index_] = f;
  if (++index_ <= steps_) return;

  ++periods_;
  if (have_previous_) gaps_.push_back(gap_from(accum_));
  have_previous_ = true;
  accum_.assign(f.size(), {});
  compare(0);
  previous_[0] = std::move(f);
  index_ = 1;
}

bool PeriodicityMonitor::done() const { return threshold_ && !gaps_.empty() && gaps_.back() < *threshold_; }

ErrorMonitor::ErrorMonitor(const CoupledSystem& system, ExactPtr exact, std::size_t steps_per_period, double dt)
    : system_(system), exact_(std::move(exact)), steps_(steps_per_period), dt_(dt) {
  if (!exact_) throw std::invalid_argument("ErrorMonitor: missing exact solution");
  if (steps_ == 0 || !(dt_ > 0.0)) throw std::invalid_argument("ErrorMonitor: invalid sampling");
}

void ErrorMonitor::start(const CoupledState& state) {
  reports_.clear();
  current_ = {};
  index_ = 0;
  sample(state);
}

void ErrorMonitor::observe(const StepRecord& record) { sample(record.after); }

const ErrorReport& ErrorMonitor::last() const {
  if (reports_.empty()) throw std::logic_error("ErrorMonitor: no completed period");
  return reports_.back();
}

void ErrorMonitor::sample(const CoupledState& state) {
  const auto accumulate = [&] {
    const double t = state.t;
    if (current_.interfaces.empty()) {
      for (const auto& b : system_.bindings) current_.interfaces.push_back({b.id});
    }
    for (std::size_t l = 0; l < system_.domains.size(); ++l) {
      const auto& d = system_.domains[l];
      const Vector ve = interpolate_velocity(d.space(), [&](Point x, double tt) { return exact_->velocity(l, x, tt); }, t);
      const Vector pe = interpolate_pressure(d.space(), d.mesh(),
                                             [&](Point x, double tt) { return exact_->pressure(l, x, tt); }, t);
      const double nv = d.ops().mass.bilinear(ve, ve);
      const double np = d.ops().pressure_mass.bilinear(pe, pe);
      if (!(nv > 0.0) || !(np > 0.0)) throw std::domain_error("ErrorMonitor: exact field vanishes at a sample");
      const Vector dv = state.velocity[l] - ve;
      const Vector dp = state.pressure[l] - pe;
      current_.err_v += d.ops().mass.bilinear(dv, dv) / nv;
      current_.err_p += d.ops().pressure_mass.bilinear(dp, dp) / np;
    }
    const Vector ye = exact_->circuit_state(t);
    for (std::size_t m = 0; m < system_.circuits.size(); ++m) {
      const auto& c = system_.circuits[m];
      const Vector& y = state.circuits[m];
      const Vector w = c.U(y, t).cwiseSqrt().cwiseProduct(y);
      const Vector we = c.U(ye, t).cwiseSqrt().cwiseProduct(ye);
      const double n = we.squaredNorm();
      if (!(n > 0.0)) throw std::domain_error("ErrorMonitor: exact circuit state vanishes at a sample");
      current_.err_y += (w - we).squaredNorm() / n;
    }
    for (std::size_t k = 0; k < system_.bindings.size(); ++k) {
      const auto& id = system_.bindings[k].id;
      auto& e = current_.interfaces[k];
      const double qe = exact_->interface_flow(id, t);
      const double pe = exact_->interface_pressure(id, t);
      e.max_flow_error = std::max(e.max_flow_error, std::abs(state.interfaces[k].Q - qe));
      e.max_pressure_error = std::max(e.max_pressure_error, std::abs(state.interfaces[k].P - pe));
      e.max_flow = std::max(e.max_flow, std::abs(qe));
      e.max_pressure = std::max(e.max_pressure, std::abs(pe));
    }
  };

  accumulate();
  if (++index_ <= steps_) return;
  ErrorReport done = current_;
  done.err_v = std::sqrt(dt_ * done.err_v);
  done.err_p = std::sqrt(dt_ * done.err_p);
  done.err_y = std::sqrt(dt_ * done.err_y);
  done.period = reports_.size() + 1;
  reports_.push_back(std::move(done));
  current_ = {};
  index_ = 0;
  accumulate();
  ++index_;
}

ErrorReport error_norms(const CoupledSystem& system, const ExactSolution& exact,
                        const std::vector<CoupledState>& trajectory, double dt) {
  if (trajectory.size() < 2) throw std::invalid_argument("error_norms: need at least two snapshots");
  ExactPtr view(std::shared_ptr<const ExactSolution>{}, &exact);
  ErrorMonitor monitor(system, view, trajectory.size() - 1, dt);
  monitor.start(trajectory.front());
  for (std::size_t n = 1; n < trajectory.size(); ++n) {
    monitor.observe({n, trajectory[n - 1], trajectory[n], trajectory[n]});
  }
  return monitor.last();
}

double convergence_rate(const std::vector<std::pair<double, double>>& samples) {
  std::set<double> distinct;
  double sx = 0.0, sy = 0.0;
  for (const auto& [dt, err] : samples) {
    if (!(dt > 0.0) || !(err > 0.0)) throw std::invalid_argument("convergence_rate: values must be positive");
    distinct.insert(dt);
    sx += std::log(dt);
    sy += std::log(err);
  }
  if (distinct.size() < 2) throw std::invalid_argument("convergence_rate: need two distinct time steps");
  const double n = static_cast<double>(samples.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [dt, err] : samples) {
    const double dx = std::log(dt) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(err) - my);
  }
  return sxy / sxx;
}

}  // namespace stokes0d
