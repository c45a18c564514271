#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "macorr/cli.hpp"
#include "macorr/field_io.hpp"
#include "macorr/fit.hpp"
#include "macorr/norms.hpp"
#include "macorr/suites.hpp"

using namespace macorr;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("macorr_test_" + name);
  std::filesystem::remove_all(p);
  return p;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

TEST(Fit, ExactPowerLaw) {
  const std::vector<double> x = {4, 8, 16};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * std::pow(v, -2.5));
  const LogLogFit f = fit_loglog(x, y);
  EXPECT_NEAR(f.slope, -2.5, 1e-12);
  EXPECT_NEAR(std::exp(f.intercept), 3.0, 1e-12);
  EXPECT_LT(f.std_error, 1e-12);
  EXPECT_EQ(f.points, 3);
}

TEST(Fit, ConfidenceIntervalCoversNoisySlope) {
  const std::vector<double> x = {1, 2, 4, 8, 16};
  const std::vector<double> y = {1.0, 0.26, 0.061, 0.0158, 0.0039};
  const LogLogFit f = fit_loglog(x, y);
  EXPECT_LT(f.ci_low, f.slope);
  EXPECT_GT(f.ci_high, f.slope);
  EXPECT_LT(f.ci_low, -2.0);
  EXPECT_GT(f.ci_high, -2.0);
}

TEST(Fit, Failures) {
  EXPECT_THROW(fit_loglog({1.0}, {1.0}), FitError);
  EXPECT_THROW(fit_loglog({1, 2, 3}, {1.0, 0.5, 0.7}), FitError);
  EXPECT_THROW(fit_loglog({1, 2}, {1.0, 0.0}), FitError);
  EXPECT_THROW(fit_loglog({1, 2}, {1.0}), FitError);
}

TEST(Fit, StudentQuantile) {
  EXPECT_NEAR(t_quantile_975(1), 12.706, 1e-3);
  EXPECT_NEAR(t_quantile_975(10), 2.228, 1e-3);
  EXPECT_NEAR(t_quantile_975(1000), 1.962, 1e-3);
}

TEST(RunConfig, DefaultsAndValidation) {
  RunConfig c;
  c.command = "verify";
  EXPECT_EQ(c.grid(), 512);
  c.command = "solve";
  EXPECT_EQ(c.grid(), 2048);
  c.lambda = 8.0;
  c.l = 0.5;
  EXPECT_DOUBLE_EQ(c.effective_sigma(), 4.0);
  EXPECT_NO_THROW(c.validate());
  c.n = 100;
  EXPECT_THROW(c.validate(), Error);
  c.n = 64;
  c.margin = 0.0;
  EXPECT_THROW(c.validate(), ParameterError);
  const nlohmann::json j = RunConfig{};
  EXPECT_FALSE(j.contains("out"));
}

TEST(Rhs, BuiltinsAndFiles) {
  const Grid2 g(32);
  EXPECT_NEAR(load_rhs("sines", g).max(), 2.0, 1e-12);
  EXPECT_EQ(sup_norm(load_rhs("zero", g)), 0.0);
  EXPECT_NEAR(load_rhs("offset", g).mean(), 0.25, 1e-14);
  const auto dir = scratch("rhs");
  std::filesystem::create_directories(dir);
  write_field(dir / "f.fld", load_rhs("mode3", g));
  EXPECT_NEAR(sup_norm(load_rhs((dir / "f.fld").string(), g) - load_rhs("mode3", g)), 0.0, 1e-15);
  EXPECT_THROW(load_rhs((dir / "f.fld").string(), Grid2(64)), ParameterError);
  EXPECT_THROW(load_rhs("no-such-rhs", g), ParameterError);
}

TEST(PointwiseNorm, Frobenius) {
  const Grid2 g(8);
  const SymMatField2 D(ScalarField::constant(g, 1.0), ScalarField::constant(g, 2.0), ScalarField::constant(g, 3.0));
  EXPECT_NEAR(pointwise_norm(D).max(), std::sqrt(1.0 + 8.0 + 9.0), 1e-15);
  EXPECT_NEAR(pointwise_norm(D).max(), sup_norm(D), 1e-15);
}

TEST(Suites, ExponentTable) {
  const SuiteResult s = suite_exponents({1, 2, 3}, {1, 2, 3}, {0, 1}, {0.5, 1.0});
  EXPECT_TRUE(s.passed()) << s.message;
  EXPECT_EQ(s.residual, 0.0);
}

TEST(Suites, ResolutionErrorsAreReportedNotThrown) {
  const SuiteResult s = suite_corrugation(64, 1, 2, {64});
  EXPECT_EQ(s.status, "error");
  EXPECT_EQ(s.error_kind, "resolution");
}

TEST(Suites, CorrugationBatteryPasses) {
  const SuiteResult s = suite_corrugation(128, 3, 4, {4, 8});
  EXPECT_TRUE(s.passed()) << s.message;
  EXPECT_EQ(s.cases, 4);
  EXPECT_LE(s.residual, 1e-9);
}

TEST(Rates, KallenSlopeIsTwiceTheRoundCount) {
  const RateSweep s = rate_kallen(256, 4, 1, 4, {4, 8, 16});
  EXPECT_NEAR(s.fit.slope, -2.0, 1e-6);
  EXPECT_EQ(s.status, "fail");
  for (const auto& row : s.detail["samples"]) EXPECT_TRUE(row["pinched"].get<bool>());
}

TEST(Rates, CommutatorSlope) {
  const RateSweep s = rate_commutator(512, 2, {0.2, 0.1, 0.05});
  EXPECT_TRUE(s.passed()) << s.message;
}

TEST(Commands, VerifyRejectsUnresolvableFrequency) {
  RunConfig c;
  c.command = "verify";
  c.n = 64;
  c.lambda = 64;
  c.inputs = 2;
  c.out = scratch("verify64");
  EXPECT_EQ(cmd_verify(c), kExitConfig);
  const nlohmann::json j = nlohmann::json::parse(slurp(c.out / "verify.json"));
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_EQ(j["first_failure"], "corrugation");
}

TEST(Commands, SolveRejectsNonZeroMean) {
  RunConfig c;
  c.command = "solve";
  c.n = 64;
  c.f = "offset";
  c.out = scratch("solve_offset");
  EXPECT_EQ(cmd_solve(c), kExitConfig);
}
