#include "stokes0d/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "stokes0d/experiments.hpp"
#include "stokes0d/verify.hpp"

namespace stokes0d {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9e", v);
  return buf;
}

std::filesystem::path prepare_out(const RunConfig& c) {
  std::filesystem::path dir(c.out);
  std::filesystem::create_directories(dir);
  return dir;
}

std::ofstream open_file(const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  return f;
}

void publish(const std::filesystem::path& path, const std::string& text, std::ostream& log) {
  open_file(path) << text;
  log << text;
}

ExampleOptions example_options(const RunConfig& c) {
  return {c.example, c.nonlinear, c.nx, c.ny, Forcing::Manufactured};
}

void header(std::ostringstream& o, const std::string& command, const RunConfig& c) {
  o << "[run]\n";
  o << "command = " << command << "\n";
  o << "example = " << c.example << "\n";
  o << "nonlinear = " << (c.nonlinear ? "true" : "false") << "\n";
  o << "nx = " << c.nx << "\n";
  o << "ny = " << c.ny << "\n";
}

void energy_section(std::ostringstream& o, const std::string& name, const EnergyReport& e) {
  o << "[" << name << "]\n";
  o << "E_omega = " << num(e.E_omega) << "\n";
  o << "E_ups = " << num(e.E_ups) << "\n";
  o << "D_omega = " << num(e.D_omega) << "\n";
  o << "D_rc = " << num(e.D_rc) << "\n";
  o << "U_ups = " << num(e.U_ups) << "\n";
}

}  // namespace

SeriesWriter::SeriesWriter(const CoupledSystem& system, std::ostream& out) : system_(system), out_(out) {}

void SeriesWriter::start(const CoupledState& state) {
  out_ << "t";
  for (const auto& b : system_.bindings) {
    const auto l = b.id.label();
    out_ << ",P_" << l << ",Q_" << l << ",pi_" << l;
  }
  for (const auto& c : system_.circuits) {
    for (std::size_t i = 0; i < c.dimension; ++i) {
      out_ << "," << (i < c.state_names.size() ? c.state_names[i] : c.name + "_" + std::to_string(i));
    }
  }
  out_ << ",E_omega,E_ups,D_omega,D_rc,U_ups\n";
  row(state);
}

void SeriesWriter::observe(const StepRecord& record) { row(record.after); }

void SeriesWriter::row(const CoupledState& s) {
  out_ << num(s.t);
  for (const auto& i : s.interfaces) out_ << "," << num(i.P) << "," << num(i.Q) << "," << num(i.pi);
  for (const auto& y : s.circuits) {
    for (Eigen::Index j = 0; j < y.size(); ++j) out_ << "," << num(y[j]);
  }
  const auto e = energy_report(system_, s);
  out_ << "," << num(e.E_omega) << "," << num(e.E_ups) << "," << num(e.D_omega) << "," << num(e.D_rc) << ","
       << num(e.U_ups) << "\n";
}

int cmd_simulate(const RunConfig& config, std::ostream& log) {
  config.validate();
  const auto dir = prepare_out(config);
  const Problem problem = build_example(config.params(), example_options(config));
  auto series = open_file(dir / "series.csv");
  SeriesWriter writer(problem.system, series);

  PeriodicRunOptions opts{config.dt, config.effective_substeps(), config.max_periods, config.eps_per, {}};
  opts.scheme.explicit_interface_pressure = config.explicit_pi;
  const auto result = simulate_to_periodicity(problem, opts, {&writer});
  if (config.max_periods == 0) writer.start(result.final_state);

  std::ostringstream o;
  header(o, "simulate", config);
  o << "dt = " << num(result.dt) << "\n";
  o << "sub = " << config.effective_substeps() << "\n";
  o << "steps_per_period = " << result.steps_per_period << "\n";
  o << "steps = " << result.steps << "\n";
  o << "periods = " << result.periods << "\n";
  o << "final_gap = " << (result.gaps.empty() ? std::string("n/a") : num(result.gaps.back())) << "\n";
  o << "eps_per = " << num(config.eps_per) << "\n";
  o << "converged = " << (result.converged ? "true" : "false") << "\n";
  energy_section(o, "initial_energy", result.initial_energy);
  energy_section(o, "final_energy", result.final_energy);
  if (result.errors) {
    o << "[errors]\n";
    o << "period = " << result.errors->period << "\n";
    o << "Err_v = " << num(result.errors->err_v) << "\n";
    o << "Err_p = " << num(result.errors->err_p) << "\n";
    o << "Err_y = " << num(result.errors->err_y) << "\n";
    o << "[interfaces]\n";
    o << "id max_Q_error rel_Q_error max_P_error rel_P_error\n";
    for (const auto& i : result.errors->interfaces) {
      o << i.id.label() << " " << num(i.max_flow_error) << " " << num(i.relative_flow_error()) << " "
        << num(i.max_pressure_error) << " " << num(i.relative_pressure_error()) << "\n";
    }
  }
  publish(dir / "summary.txt", o.str(), log);
  if (config.max_periods == 0) return 0;
  return result.converged ? 0 : 2;
}

int cmd_convergence(const RunConfig& config, std::ostream& log) {
  config.validate();
  const auto dir = prepare_out(config);
  const std::vector<double> dts = config.dts.empty() ? std::vector<double>{0.01, 0.005, 0.001} : config.dts;
  const Problem problem = build_example(config.params(), example_options(config));
  const auto report = convergence_study(problem, dts, config.effective_substeps(), config.max_periods, config.eps_per);

  std::ostringstream o;
  header(o, "convergence", config);
  o << "sub = " << config.effective_substeps() << "\n";
  o << "[table]\n";
  o << "dt steps_per_period periods converged Err_v Err_p Err_y rel_Q_error rel_P_error\n";
  for (const auto& r : report.rows) {
    o << num(r.result.dt) << " " << r.result.steps_per_period << " " << r.result.periods << " "
      << (r.result.converged ? "true" : "false");
    if (r.result.errors) {
      const auto& e = *r.result.errors;
      o << " " << num(e.err_v) << " " << num(e.err_p) << " " << num(e.err_y) << " "
        << num(e.interfaces.front().relative_flow_error()) << " " << num(e.interfaces.front().relative_pressure_error());
    } else {
      o << " n/a n/a n/a n/a n/a";
    }
    o << "\n";
  }
  if (report.slope_v) {
    o << "[slopes]\n";
    o << "Err_v = " << num(*report.slope_v) << "\n";
    o << "Err_p = " << num(*report.slope_p) << "\n";
    o << "Err_y = " << num(*report.slope_y) << "\n";
    o << "decreasing = " << (report.errors_decrease() ? "true" : "false") << "\n";
  }
  publish(dir / "convergence.txt", o.str(), log);
  return report.all_converged() ? 0 : 2;
}

int cmd_stability(const RunConfig& config, std::ostream& log) {
  config.validate();
  const auto dir = prepare_out(config);
  StabilityOptions opts;
  if (!config.dts.empty()) opts.dts = config.dts;
  opts.steps = config.steps;
  opts.substeps = config.substeps > 0 ? config.substeps : 5;
  opts.nx = config.nx;
  opts.ny = config.ny;
  opts.scheme.explicit_interface_pressure = config.explicit_pi;
  const auto cases = stability_study(config.params(), opts);

  std::ostringstream o;
  o << "[run]\ncommand = stability\nexample = 1\ncoefficients = constant\nforcing = none\n";
  o << "explicit_pi = " << (config.explicit_pi ? "true" : "false") << "\n";
  o << "steps = " << opts.steps << "\n";
  o << "[table]\n";
  o << "dt E0 max_increase max_step1_increase max_step2_increase max_identity_residual identity_steps result\n";
  bool ok = true;
  for (const auto& c : cases) {
    o << num(c.dt) << " " << num(c.initial_energy) << " " << num(c.max_increase) << " " << num(c.max_step1_increase)
      << " " << num(c.max_step2_increase) << " " << num(c.max_identity_residual) << " " << c.identity_steps << " "
      << (c.passed() ? "PASS" : "FAIL") << "\n";
    ok = ok && c.passed();
  }
  o << "result = " << (ok ? "PASS" : "FAIL") << "\n";
  publish(dir / "stability.txt", o.str(), log);
  return ok ? 0 : 1;
}

int cmd_verify_oracle(const RunConfig& config, std::ostream& log) {
  config.validate();
  const auto dir = prepare_out(config);
  const auto report = verify_oracle(config.params(), example_options(config));
  std::ostringstream o;
  header(o, "verify-oracle", config);
  o << "[checks]\n";
  o << "name value threshold result\n";
  for (const auto& c : report.checks) {
    o << c.name << " " << num(c.value) << " " << num(c.threshold) << " " << (c.passed ? "PASS" : "FAIL");
    if (!c.passed && !c.detail.empty()) o << " (" << c.detail << ")";
    o << "\n";
  }
  o << "result = " << (report.passed() ? "PASS" : "FAIL") << "\n";
  publish(dir / "verify.txt", o.str(), log);
  return report.passed() ? 0 : 1;
}

void dump_mesh(const RunConfig& config, const std::string& path) {
  config.validate();
  const Problem problem = build_example(config.params(), example_options(config));
  auto f = open_file(path);
  for (std::size_t l = 0; l < problem.system.domains.size(); ++l) {
    if (problem.system.domains.size() > 1) f << "# domain " << l + 1 << "\n";
    write_mesh(f, problem.system.domains[l].mesh());
  }
}

}  // namespace stokes0d
