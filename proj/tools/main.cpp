// stokes0d: run the Stokes-circuit benchmarks from the command line.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stokes0d/cli.hpp"

namespace {

struct Flags {
  std::string config_file;
  std::string dump_mesh;
  std::vector<std::string> sets;
};

void add_common(CLI::App& cmd, stokes0d::RunConfig& c, Flags& f) {
  cmd.add_option("--config", f.config_file, "key = value file; command-line flags override it");
  cmd.add_option("--example", c.example, "benchmark 1, 2 or 3")->check(CLI::Range(1, 3));
  cmd.add_flag("--nonlinear", c.nonlinear, "nonlinear R_a, C_a (example 1)");
  cmd.add_option("--dt", c.dt, "global time step [s], must divide the period");
  cmd.add_option("--sub", c.substeps, "Step-2 substeps (0: 5 for example 1, 10 otherwise)");
  cmd.add_option("--nx", c.nx, "cells along the channel");
  cmd.add_option("--ny", c.ny, "cells across the channel");
  cmd.add_option("--max-periods", c.max_periods, "period budget");
  cmd.add_option("--eps-per", c.eps_per, "periodicity threshold");
  cmd.add_option("--out", c.out, "output directory");
  cmd.add_option("--set", f.sets, "parameter override name=value (repeatable)");
  cmd.add_option("--dts", c.dts, "time-step list")->delimiter(',');
  cmd.add_option("--steps", c.steps, "steps per stability case");
  cmd.add_flag("--explicit-pi", c.explicit_pi, "lag the interface pressure in Step 1 (diagnostic)");
  cmd.add_option("--dump-mesh", f.dump_mesh, "write the mesh to this file");
}

// File values first, then every flag given on the command line.
stokes0d::RunConfig merge(const CLI::App& cmd, const stokes0d::RunConfig& flags, const Flags& f) {
  stokes0d::RunConfig c = flags;
  if (!f.config_file.empty()) {
    std::ifstream in(f.config_file);
    if (!in) throw std::runtime_error("cannot read " + f.config_file);
    c = stokes0d::parse_config(in);
    const auto given = [&](const char* name) { return cmd.count(name) > 0; };
    if (given("--example")) c.example = flags.example;
    if (given("--nonlinear")) c.nonlinear = flags.nonlinear;
    if (given("--dt")) c.dt = flags.dt;
    if (given("--sub")) c.substeps = flags.substeps;
    if (given("--nx")) c.nx = flags.nx;
    if (given("--ny")) c.ny = flags.ny;
    if (given("--max-periods")) c.max_periods = flags.max_periods;
    if (given("--eps-per")) c.eps_per = flags.eps_per;
    if (given("--out")) c.out = flags.out;
    if (given("--dts")) c.dts = flags.dts;
    if (given("--steps")) c.steps = flags.steps;
    if (given("--explicit-pi")) c.explicit_pi = flags.explicit_pi;
  }
  for (const auto& s : f.sets) {
    const auto [name, value] = stokes0d::parse_override(s);
    c.overrides[name] = value;
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stokes flow coupled to lumped circuits by operator splitting"};
  app.require_subcommand(1);

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const stokes0d::RunConfig&, std::ostream&);
  };
  const std::vector<Command> commands = {
      {"simulate", "run to periodicity and write series.csv and summary.txt", stokes0d::cmd_simulate},
      {"convergence", "errors and slopes over a list of time steps", stokes0d::cmd_convergence},
      {"stability", "energy monotonicity of the unforced constant circuit", stokes0d::cmd_stability},
      {"verify-oracle", "self-consistency of the exact solution", stokes0d::cmd_verify_oracle},
  };

  std::vector<stokes0d::RunConfig> configs(commands.size());
  std::vector<Flags> flags(commands.size());
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    auto* sub = app.add_subcommand(commands[i].name, commands[i].help);
    add_common(*sub, configs[i], flags[i]);
    subs.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (std::size_t i = 0; i < commands.size(); ++i) {
      if (!subs[i]->parsed()) continue;
      const auto config = merge(*subs[i], configs[i], flags[i]);
      if (!flags[i].dump_mesh.empty()) stokes0d::dump_mesh(config, flags[i].dump_mesh);
      return commands[i].run(config, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
