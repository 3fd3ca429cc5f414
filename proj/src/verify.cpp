#include "stokes0d/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stokes0d/quadrature.hpp"

namespace stokes0d {

bool ResidualReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const ResidualCheck& ResidualReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("ResidualReport: no check named '" + name + "'");
}

namespace {

double safe_ratio(double num, double den) { return den > 0.0 ? num / den : num; }

ResidualCheck make_check(std::string name, double value, double threshold, std::string detail = {}) {
  return {std::move(name), value, threshold, std::isfinite(value) && value <= threshold, std::move(detail)};
}

Vector free_part(const StokesSpace& sp, const Vector& x) {
  Vector out(static_cast<Eigen::Index>(sp.free_dofs().size()));
  for (std::size_t i = 0; i < sp.free_dofs().size(); ++i) {
    out[static_cast<Eigen::Index>(i)] = x[static_cast<Eigen::Index>(sp.free_dofs()[i])];
  }
  return out;
}

}  // namespace

ResidualReport verify_exact(const ParamSet& p, int example, bool nonlinear, const Problem& problem,
                            const VerifyOptions& options) {
  if (options.samples == 0) throw std::invalid_argument("verify_exact: need at least one sample");
  const auto& sys = problem.system;
  const auto& ex = *problem.exact;
  const auto& circuit = sys.circuits.at(0);
  const double tau = ex.period();
  std::vector<double> times;
  for (std::size_t j = 0; j < options.samples; ++j) times.push_back(tau * static_cast<double>(j) / options.samples);

  ResidualReport report;
  report.example = example;
  const auto bad = p.violations(example);
  report.checks.push_back(make_check("parameter_positivity", static_cast<double>(bad.size()), 0.0));

  double ode = 0.0, relation = 0.0, flow = 0.0;
  const LineRule line = gauss_legendre(12);
  for (double t : times) {
    const Vector y = ex.circuit_state(t);
    const Vector dy = ex.circuit_state_dt(t);
    std::vector<double> flows;
    for (const auto& c : circuit.connections) flows.push_back(ex.interface_flow(c.interface, t));
    const Vector ay = circuit.A(y, t) * y;
    const Vector s = circuit.source(y, t);
    const Vector b = circuit.coupling(flows);
    const double scale = std::max({dy.norm(), ay.norm(), s.norm(), b.norm()});
    ode = std::max(ode, safe_ratio((dy - ay - s - b).norm(), scale));

    for (const auto& c : circuit.connections) {
      const double P = ex.interface_pressure(c.interface, t);
      const double Q = ex.interface_flow(c.interface, t);
      const double pi = y[static_cast<Eigen::Index>(c.pi_index)];
      relation = std::max(relation, safe_ratio(std::abs(P - pi - c.resistance * Q), std::abs(P)));

      const auto& info = ex.interface(c.interface);
      const double x = info.side == Side::Left ? 0.0 : p.L;
      double q = 0.0;
      for (std::size_t g = 0; g < line.points.size(); ++g) {
        const double yy = -0.5 * p.H + p.H * line.points[g];
        q += line.weights[g] * p.H * ex.velocity(info.domain, {x, yy}, t).x * outward_normal(info.side).x;
      }
      flow = std::max(flow, safe_ratio(std::abs(q - Q), std::abs(Q)));
    }
  }
  const double tol = options.algebraic_tolerance;
  report.checks.push_back(make_check("circuit_ode", ode, tol));
  report.checks.push_back(make_check("interface_relation", relation, tol, "P - pi - R Q with pi from the circuit state"));
  report.checks.push_back(make_check("interface_flow", flow, tol, "Q against the flux of the exact velocity"));

  if (example == 1) {
    double vol = 0.0;
    for (double t : times) {
      const Vector y = ex.circuit_state(t);
      const Vector dy = ex.circuit_state_dt(t);
      const double q = ex.interface_flow({1, 1, 1}, t);
      const double ra = example1_resistance(p, nonlinear, y[0]);
      const double ca = example1_capacitance(p, nonlinear, y[1]);
      vol = std::max(vol, safe_ratio(std::abs(y[1] - ca * (y[0] - ra * (q - p.C11_1 * dy[0]))), std::abs(y[1])));
    }
    report.checks.push_back(make_check("volume_pressure", vol, tol));
  }
  if (example == 3) {
    double ind = 0.0;
    for (double t : times) {
      const Vector y = ex.circuit_state(t);
      const Vector dy = ex.circuit_state_dt(t);
      const double lhs = p.Lc * dy[2];
      const double rhs = y[0] - y[1] - p.Rc * y[2];
      ind = std::max(ind, safe_ratio(std::abs(lhs - rhs), std::max({std::abs(y[0]), std::abs(y[1]), std::abs(p.Rc * y[2])})));
    }
    report.checks.push_back(make_check("inductor_ode", ind, tol));
  }

  {
    std::vector<std::function<double(double)>> signals;
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(circuit.dimension); ++i) {
      signals.push_back([&ex, i](double t) { return ex.circuit_state(t)[i]; });
      signals.push_back([&ex, i](double t) { return ex.circuit_state_dt(t)[i]; });
    }
    for (const auto& c : circuit.connections) {
      signals.push_back([&ex, id = c.interface](double t) { return ex.interface_pressure(id, t); });
      signals.push_back([&ex, id = c.interface](double t) { return ex.interface_flow(id, t); });
    }
    for (const auto& g : ex.generators()) signals.push_back(g);
    for (std::size_t l = 0; l < ex.num_domains(); ++l) {
      signals.push_back([&ex, l](double t) { return ex.amplitude(l, t); });
      signals.push_back([&ex, l](double t) { return ex.external_pressure(l, t); });
    }
    double per = 0.0;
    for (const auto& f : signals) {
      double scale = 0.0, diff = 0.0;
      for (double t : times) {
        scale = std::max(scale, std::abs(f(t)));
        diff = std::max(diff, std::abs(f(t + tau) - f(t)));
      }
      per = std::max(per, safe_ratio(diff, scale));
    }
    report.checks.push_back(make_check("periodicity", per, options.periodicity_tolerance));
  }

  double weak = 0.0, div = 0.0;
  for (std::size_t l = 0; l < sys.domains.size(); ++l) {
    const auto& d = sys.domains[l];
    const auto& sp = d.space();
    const auto& ops = d.ops();
    for (double t : times) {
      const VectorField vf = [&](Point x, double tt) { return ex.velocity(l, x, tt); };
      const VectorField vdf = [&](Point x, double tt) { return ex.velocity_dt(l, x, tt); };
      const Vector v = interpolate_velocity(sp, vf, t);
      const Vector vt = interpolate_velocity(sp, vdf, t);
      const Vector pr = interpolate_pressure(sp, d.mesh(), [&](Point x, double tt) { return ex.pressure(l, x, tt); }, t);

      std::vector<Vector> terms;
      terms.push_back(sys.fluid.rho * ops.mass.multiply(vt));
      terms.push_back(sys.fluid.mu * ops.stiffness.multiply(v));
      terms.push_back(-ops.divergence.transpose_multiply(pr));
      for (const auto& b : sys.bindings) {
        if (b.domain == l) terms.push_back(ex.interface_pressure(b.id, t) * sys.flux_vector(b));
      }
      if (d.has_external_pressure()) terms.push_back(d.external_pressure(t) * ops.neumann_load);
      terms.push_back(-sys.fluid.rho * d.body_force(t));

      Vector r = Vector::Zero(static_cast<Eigen::Index>(sp.velocity_dofs()));
      double scale = 0.0;
      for (const auto& term : terms) {
        r += term;
        scale = std::max(scale, free_part(sp, term).norm());
      }
      weak = std::max(weak, safe_ratio(free_part(sp, r).norm(), scale));
      div = std::max(div, safe_ratio(ops.divergence.multiply(v).norm(), ops.divergence.max_abs() * v.norm()));
    }
  }
  report.checks.push_back(make_check("discrete_divergence", div, tol));
  report.checks.push_back(make_check("stokes_weak_residual", weak, options.weak_tolerance,
                                     "interpolation-limited, second order in h"));
  return report;
}

ResidualReport verify_oracle(const ParamSet& p, const ExampleOptions& example, const VerifyOptions& options) {
  const auto bad = p.violations(example.example);
  if (!bad.empty()) {
    ResidualReport report;
    report.example = example.example;
    std::string names;
    for (const auto& b : bad) names += (names.empty() ? "" : ", ") + b;
    report.checks.push_back(make_check("parameter_positivity", static_cast<double>(bad.size()), 0.0,
                                       "non-positive: " + names));
    return report;
  }
  const Problem problem = build_example(p, example);
  return verify_exact(p, example.example, example.nonlinear, problem, options);
}

}  // namespace stokes0d
