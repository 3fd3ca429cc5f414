#include "stokes0d/exact.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace stokes0d {

double Sinusoid::operator()(double t) const { return c0 + cs * std::sin(w * t) + cc * std::cos(w * t); }

Sinusoid Sinusoid::derivative() const { return {0.0, -w * cc, w * cs, w}; }

Sinusoid operator+(const Sinusoid& a, const Sinusoid& b) {
  if (a.w != b.w) throw std::invalid_argument("Sinusoid: frequencies differ");
  return {a.c0 + b.c0, a.cs + b.cs, a.cc + b.cc, a.w};
}

Sinusoid operator-(const Sinusoid& a, const Sinusoid& b) { return a + (-1.0) * b; }

Sinusoid operator*(double c, const Sinusoid& a) { return {c * a.c0, c * a.cs, c * a.cc, a.w}; }

ExactSolution::ExactSolution(const ParamSet& p, std::vector<ExactDomain> domains,
                             std::vector<ExactInterface> interfaces, std::function<Vector(double)> state,
                             std::function<Vector(double)> state_dt, std::vector<TimeSignal> generators)
    : p_(p),
      domains_(std::move(domains)),
      interfaces_(std::move(interfaces)),
      state_(std::move(state)),
      state_dt_(std::move(state_dt)),
      generators_(std::move(generators)) {
  for (const auto& i : interfaces_) {
    if (i.domain >= domains_.size()) throw std::invalid_argument("ExactSolution: interface on unknown domain");
    if (i.side != Side::Left && i.side != Side::Right) {
      throw std::invalid_argument("ExactSolution: interfaces must lie on vertical sides");
    }
  }
}

double ExactSolution::period() const { return p_.period(); }

const ExactDomain& ExactSolution::dom(std::size_t l) const {
  if (l >= domains_.size()) throw std::out_of_range("ExactSolution: domain index out of range");
  return domains_[l];
}

double ExactSolution::profile_velocity(double y) const {
  const double c = std::cos(std::numbers::pi * y / p_.H);
  return p_.V0 * c * c;
}

double ExactSolution::profile_pressure(const ExactDomain& d, double x) const {
  return d.a0 + d.a1 * std::exp(-p_.k * x);
}

double ExactSolution::side_pressure(const ExactDomain& d, Side side) const {
  switch (side) {
    case Side::Left:
      return profile_pressure(d, 0.0);
    case Side::Right:
      return profile_pressure(d, p_.L);
    default:
      throw std::invalid_argument("ExactSolution: no pressure datum on horizontal sides");
  }
}

double ExactSolution::amplitude(std::size_t domain, double t) const { return dom(domain).amplitude(t); }

Point ExactSolution::velocity(std::size_t domain, Point x, double t) const {
  return {dom(domain).amplitude(t) * profile_velocity(x.y), 0.0};
}

Point ExactSolution::velocity_dt(std::size_t domain, Point x, double t) const {
  return {dom(domain).amplitude.derivative()(t) * profile_velocity(x.y), 0.0};
}

double ExactSolution::pressure(std::size_t domain, Point x, double t) const {
  const auto& d = dom(domain);
  return d.amplitude(t) * profile_pressure(d, x.x);
}

std::vector<ForceTerm> ExactSolution::force_terms(std::size_t domain) const {
  const auto& d = dom(domain);
  const ParamSet p = p_;
  const Sinusoid s = d.amplitude;
  const Sinusoid ds = s.derivative();
  const double a1 = d.a1;
  std::vector<ForceTerm> terms;
  terms.push_back({[ds](double t) { return ds(t); },
                   [p](Point x) {
                     const double c = std::cos(std::numbers::pi * x.y / p.H);
                     return Point{p.V0 * c * c, 0.0};
                   }});
  terms.push_back({[s](double t) { return s(t); },
                   [p, a1](Point x) {
                     const double kk = std::numbers::pi / p.H;
                     const double v2 = -2.0 * p.V0 * kk * kk * std::cos(2.0 * kk * x.y);
                     const double dp = -p.k * a1 * std::exp(-p.k * x.x);
                     return Point{(-p.mu * v2 + dp) / p.rho, 0.0};
                   }});
  return terms;
}

Point ExactSolution::body_force(std::size_t domain, Point x, double t) const {
  Point f;
  for (const auto& term : force_terms(domain)) {
    const double c = term.coefficient(t);
    const Point g = term.shape(x);
    f.x += c * g.x;
    f.y += c * g.y;
  }
  return f;
}

double ExactSolution::external_pressure(std::size_t domain, double t) const {
  const auto& d = dom(domain);
  if (!d.external_side) return 0.0;
  return d.amplitude(t) * side_pressure(d, *d.external_side);
}

const ExactInterface& ExactSolution::interface(const InterfaceId& id) const {
  for (const auto& i : interfaces_) {
    if (i.id == id) return i;
  }
  throw std::out_of_range("ExactSolution: unknown interface " + id.label());
}

double ExactSolution::interface_pressure(const InterfaceId& id, double t) const {
  const auto& i = interface(id);
  const auto& d = dom(i.domain);
  return d.amplitude(t) * side_pressure(d, i.side);
}

double ExactSolution::interface_flow(const InterfaceId& id, double t) const {
  const auto& i = interface(id);
  const double sign = outward_normal(i.side).x;
  return sign * 0.5 * p_.V0 * p_.H * dom(i.domain).amplitude(t);
}

double ExactSolution::interface_pi(const InterfaceId& id, double t) const {
  return interface_pressure(id, t) - interface(id).resistance * interface_flow(id, t);
}

double example1_volume(const ParamSet& p, bool nonlinear, double pi, double q, double dpi) {
  const double x = pi - example1_resistance(p, nonlinear, pi) * (q - p.C11_1 * dpi);
  if (!nonlinear || p.gamma1 == 0.0) return p.Ca_bar * x;
  const double disc = 1.0 + 4.0 * p.gamma1 * p.Ca_bar * x;
  if (disc < 0.0) throw std::domain_error("example1_volume: negative discriminant, invalid parameter regime");
  return (-1.0 + std::sqrt(disc)) / (2.0 * p.gamma1);
}

namespace {

Sinusoid base_amplitude(const ParamSet& p) { return {p.s0, p.s1, 0.0, p.omega}; }

double half_flux(const ParamSet& p) { return 0.5 * p.V0 * p.H; }

double profile(double a0, double a1, double k, double x) { return a0 + a1 * std::exp(-k * x); }

// Volume of the first circuit and its time derivative along the exact pressure.
struct Example1Volume {
  ParamSet p;
  bool nonlinear;
  Sinusoid pi, q;

  std::pair<double, double> operator()(double t) const {
    const Sinusoid dpi_s = pi.derivative();
    const double pv = pi(t), dpi = dpi_s(t), d2pi = dpi_s.derivative()(t);
    const double qv = q(t), dq = q.derivative()(t);
    const double ra = example1_resistance(p, nonlinear, pv);
    double dra = 0.0;
    if (nonlinear) {
      const double e = std::exp(-p.alpha2 * pv);
      const double den = 1.0 + p.alpha1 * e;
      dra = p.alpha0 * p.alpha1 * p.alpha2 * e / (den * den);
    }
    const double x = pv - ra * (qv - p.C11_1 * dpi);
    const double dx = dpi - dra * dpi * (qv - p.C11_1 * dpi) - ra * (dq - p.C11_1 * d2pi);
    const double w = example1_volume(p, nonlinear, pv, qv, dpi);
    if (!nonlinear || p.gamma1 == 0.0) return {w, p.Ca_bar * dx};
    return {w, p.Ca_bar * dx / std::sqrt(1.0 + 4.0 * p.gamma1 * p.Ca_bar * x)};
  }
};

}  // namespace

ExactPtr example1_exact(const ParamSet& p, bool nonlinear) {
  const Sinusoid s = base_amplitude(p);
  const double h = half_flux(p);
  const Sinusoid q = h * s;
  const Sinusoid pi = (profile(p.a0, p.a1, p.k, p.L) - p.R11_1 * h) * s;
  const Example1Volume volume{p, nonlinear, pi, q};

  auto state = [pi, volume](double t) {
    Vector y(2);
    y << pi(t), volume(t).first;
    return y;
  };
  auto state_dt = [pi, volume](double t) {
    Vector y(2);
    y << pi.derivative()(t), volume(t).second;
    return y;
  };
  TimeSignal generator = [p, nonlinear, pi, volume](double t) {
    const auto [w, dw] = volume(t);
    const double pv = pi(t);
    const double ra = example1_resistance(p, nonlinear, pv);
    const double ca = example1_capacitance(p, nonlinear, w);
    return p.Rb * dw - p.Rb / ra * pv + p.Rb / ca * (1.0 / ra + 1.0 / p.Rb) * w;
  };
  std::vector<ExactDomain> domains = {{s, p.a0, p.a1, Side::Left}};
  std::vector<ExactInterface> interfaces = {{{1, 1, 1}, 0, Side::Right, p.R11_1}};
  return std::make_shared<const ExactSolution>(p, std::move(domains), std::move(interfaces), state, state_dt,
                                               std::vector<TimeSignal>{generator});
}

ExactPtr example2_exact(const ParamSet& p) {
  const Sinusoid s1 = base_amplitude(p);
  const double h = half_flux(p);
  const Sinusoid q11 = h * s1;
  const Sinusoid pi11 = (profile(p.a01, p.a11, p.k, p.L) - p.R11_1 * h) * s1;
  const Sinusoid w = q11 - p.C11_1 * pi11.derivative();
  const Sinusoid pi21 = pi11 - p.Ra * w - p.La * w.derivative();
  const Sinusoid s2 = (1.0 / (p.a02 + p.a12 + p.R21_1 * h)) * pi21;
  const Sinusoid q21 = (-h) * s2;
  const Sinusoid gen = (-p.Rb) * w + pi21 - p.Rb * q21 + (p.Rb * p.C21_1) * pi21.derivative();

  auto state = [pi11, pi21, w](double t) {
    Vector y(3);
    y << pi11(t), pi21(t), w(t);
    return y;
  };
  auto state_dt = [d11 = pi11.derivative(), d21 = pi21.derivative(), dw = w.derivative()](double t) {
    Vector y(3);
    y << d11(t), d21(t), dw(t);
    return y;
  };
  std::vector<ExactDomain> domains = {{s1, p.a01, p.a11, Side::Left}, {s2, p.a02, p.a12, Side::Right}};
  std::vector<ExactInterface> interfaces = {{{1, 1, 1}, 0, Side::Right, p.R11_1},
                                            {{2, 1, 1}, 1, Side::Left, p.R21_1}};
  return std::make_shared<const ExactSolution>(p, std::move(domains), std::move(interfaces), state, state_dt,
                                               std::vector<TimeSignal>{[gen](double t) { return gen(t); }});
}

ExactPtr example3_exact(const ParamSet& p) {
  const Sinusoid s = base_amplitude(p);
  const double h = half_flux(p);
  const double p_left = profile(p.a0, p.a1, p.k, 0.0);
  const double p_right = profile(p.a0, p.a1, p.k, p.L);
  const Sinusoid q11 = h * s;
  const Sinusoid q12 = (-h) * s;
  const Sinusoid pi11 = p_right * s - p.R11_1 * q11;
  const Sinusoid pi12 = p_left * s - p.R11_2 * q12;

  const double c = (p_right - p_left - (p.R11_1 + p.R11_2) * h) / p.Rc;
  const double ratio = p.omega * p.Lc / p.Rc;
  const double l1 = p.s0 * c;
  const double l2 = p.s1 * c / (ratio * ratio + 1.0);
  const double l3 = -ratio * l2;
  const Sinusoid w{l1, l2, l3, p.omega};

  const Sinusoid gen_a = (p.Ra * p.C11_1) * pi11.derivative() + pi11 + p.Ra * (w - q11);
  const Sinusoid gen_b = (p.Rb * p.C11_2) * pi12.derivative() + pi12 - p.Rb * (w + q12);

  auto state = [pi11, pi12, w](double t) {
    Vector y(3);
    y << pi11(t), pi12(t), w(t);
    return y;
  };
  auto state_dt = [d11 = pi11.derivative(), d12 = pi12.derivative(), dw = w.derivative()](double t) {
    Vector y(3);
    y << d11(t), d12(t), dw(t);
    return y;
  };
  std::vector<ExactDomain> domains = {{s, p.a0, p.a1, std::nullopt}};
  std::vector<ExactInterface> interfaces = {{{1, 1, 1}, 0, Side::Right, p.R11_1},
                                            {{1, 1, 2}, 0, Side::Left, p.R11_2}};
  return std::make_shared<const ExactSolution>(
      p, std::move(domains), std::move(interfaces), state, state_dt,
      std::vector<TimeSignal>{[gen_a](double t) { return gen_a(t); }, [gen_b](double t) { return gen_b(t); }});
}

}  // namespace stokes0d
