#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "stokes0d/cli.hpp"

using namespace stokes0d;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("stokes0d_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, VerifyOracleWritesReport) {
  RunConfig c;
  c.example = 3;
  c.out = scratch("verify").string();
  std::ostringstream log;
  EXPECT_EQ(cmd_verify_oracle(c, log), 0);
  const auto text = slurp(fs::path(c.out) / "verify.txt");
  EXPECT_NE(text.find("circuit_ode"), std::string::npos);
  EXPECT_NE(text.find("result = PASS"), std::string::npos);
  EXPECT_EQ(log.str(), text);
}

TEST(Cli, VerifyOracleFailsOnCorruptedParameter) {
  RunConfig c;
  c.out = scratch("verify_bad").string();
  c.overrides["R11_1"] = -10.0;
  std::ostringstream log;
  EXPECT_NE(cmd_verify_oracle(c, log), 0);
  EXPECT_NE(log.str().find("R11_1"), std::string::npos);
}

TEST(Cli, SimulateWritesSeriesAndSummary) {
  RunConfig c;
  c.nx = 10;
  c.ny = 4;
  c.dt = 0.05;
  c.max_periods = 1;
  c.out = scratch("simulate").string();
  std::ostringstream log;
  // One period cannot establish periodicity.
  EXPECT_EQ(cmd_simulate(c, log), 2);
  std::ifstream series(fs::path(c.out) / "series.csv");
  std::string header;
  std::getline(series, header);
  EXPECT_EQ(header, "t,P_S11_1,Q_S11_1,pi_S11_1,pi11_1,omega11,E_omega,E_ups,D_omega,D_rc,U_ups");
  std::size_t rows = 0;
  for (std::string line; std::getline(series, line);) ++rows;
  EXPECT_EQ(rows, 41u);
  const auto summary = slurp(fs::path(c.out) / "summary.txt");
  EXPECT_NE(summary.find("steps_per_period = 40"), std::string::npos);
  EXPECT_NE(summary.find("converged = false"), std::string::npos);
  EXPECT_NE(summary.find("Err_v"), std::string::npos);
}

TEST(Cli, SimulateWithoutStepsWritesInitialRow) {
  RunConfig c;
  c.nx = 6;
  c.ny = 2;
  c.max_periods = 0;
  c.out = scratch("simulate0").string();
  std::ostringstream log;
  EXPECT_EQ(cmd_simulate(c, log), 0);
  std::ifstream series(fs::path(c.out) / "series.csv");
  std::size_t lines = 0;
  for (std::string line; std::getline(series, line);) ++lines;
  EXPECT_EQ(lines, 2u);
}

TEST(Cli, StabilityPassesAndExplicitControlFails) {
  RunConfig c;
  c.nx = 10;
  c.ny = 4;
  c.steps = 10;
  c.out = scratch("stability").string();
  std::ostringstream log;
  EXPECT_EQ(cmd_stability(c, log), 0);
  EXPECT_NE(log.str().find("result = PASS"), std::string::npos);
  c.explicit_pi = true;
  std::ostringstream bad;
  EXPECT_NE(cmd_stability(c, bad), 0);
}

TEST(Cli, ConvergenceReportsSlopes) {
  RunConfig c;
  c.nx = 10;
  c.ny = 4;
  c.dts = {0.1, 0.05};
  c.max_periods = 3;
  c.out = scratch("convergence").string();
  std::ostringstream log;
  cmd_convergence(c, log);
  const auto text = slurp(fs::path(c.out) / "convergence.txt");
  EXPECT_NE(text.find("[slopes]"), std::string::npos);
}

TEST(Cli, DumpMeshAndRejectInvalidConfig) {
  RunConfig c;
  c.example = 2;
  c.nx = 4;
  c.ny = 2;
  const auto dir = scratch("mesh");
  fs::create_directories(dir);
  dump_mesh(c, (dir / "mesh.txt").string());
  const auto text = slurp(dir / "mesh.txt");
  EXPECT_NE(text.find("# domain 2"), std::string::npos);
  c.example = 7;
  std::ostringstream log;
  EXPECT_THROW(cmd_simulate(c, log), std::invalid_argument);
}
