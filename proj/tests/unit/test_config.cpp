#include <gtest/gtest.h>

#include "stokes0d/config.hpp"

using namespace stokes0d;

TEST(Config, RoundTrip) {
  RunConfig c;
  c.example = 2;
  c.dt = 0.005;
  c.substeps = 4;
  c.nx = 50;
  c.ny = 10;
  c.max_periods = 7;
  c.eps_per = 1e-8;
  c.out = "results/run one";
  c.overrides = {{"La", 0.004}, {"R21_1", 12.5}};
  c.dts = {0.01, 0.002};
  c.steps = 30;
  c.explicit_pi = true;
  EXPECT_EQ(parse_config_string(emit_config(c)), c);
  EXPECT_EQ(parse_config_string(emit_config(RunConfig{})), RunConfig{});
}

TEST(Config, ParsesCommentsAndWhitespace) {
  const auto c = parse_config_string(
      "# run\n"
      "example = 3   # trailing\n"
      "\n"
      "  dt=0.001\n"
      "set = Rc=80\n"
      "dts = 0.01, 0.005\n");
  EXPECT_EQ(c.example, 3);
  EXPECT_DOUBLE_EQ(c.dt, 0.001);
  EXPECT_DOUBLE_EQ(c.overrides.at("Rc"), 80.0);
  ASSERT_EQ(c.dts.size(), 2u);
  EXPECT_DOUBLE_EQ(c.params().Rc, 80.0);
}

TEST(Config, RejectsMalformedInput) {
  EXPECT_THROW(parse_config_string("example\n"), std::invalid_argument);
  EXPECT_THROW(parse_config_string("colour = blue\n"), std::invalid_argument);
  EXPECT_THROW(parse_config_string("dt = fast\n"), std::invalid_argument);
  EXPECT_THROW(parse_override("R11_1"), std::invalid_argument);
  EXPECT_THROW(parse_override("R11_1=abc"), std::invalid_argument);
  EXPECT_EQ(parse_override("R11_1=3.5"), (std::pair<std::string, double>{"R11_1", 3.5}));
}

TEST(Config, ValidateChecksExampleConsistency) {
  RunConfig c;
  EXPECT_NO_THROW(c.validate());
  c.overrides["La"] = 0.01;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.example = 2;
  EXPECT_NO_THROW(c.validate());
  c.nonlinear = true;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = RunConfig{};
  c.overrides["nonsense"] = 1.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = RunConfig{};
  c.dt = -1.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = RunConfig{};
  c.example = 4;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Config, DefaultSubsteps) {
  RunConfig c;
  EXPECT_EQ(c.effective_substeps(), 5);
  c.example = 2;
  EXPECT_EQ(c.effective_substeps(), 10);
  c.substeps = 3;
  EXPECT_EQ(c.effective_substeps(), 3);
}

TEST(Params, SetGetAndValidation) {
  ParamSet p;
  p.set("Lc", 0.5);
  EXPECT_DOUBLE_EQ(p.get("Lc"), 0.5);
  EXPECT_THROW(p.set("bogus", 1.0), std::invalid_argument);
  EXPECT_TRUE(ParamSet::used_by("La", 2));
  EXPECT_FALSE(ParamSet::used_by("La", 1));
  EXPECT_TRUE(ParamSet::used_by("mu", 3));
  p.C11_1 = 0.0;
  ASSERT_EQ(p.violations(1).size(), 1u);
  EXPECT_EQ(p.violations(1).front(), "C11_1");
  EXPECT_THROW(p.validate(1), std::invalid_argument);
  EXPECT_DOUBLE_EQ(ParamSet{}.period(), 2.0);
}
