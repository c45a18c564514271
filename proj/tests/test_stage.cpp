#include <gtest/gtest.h>

#include <cmath>

#include "macorr/calculus.hpp"
#include "macorr/norms.hpp"
#include "macorr/spectral.hpp"
#include "macorr/stage.hpp"

using namespace macorr;

namespace {

StageParams params(int K, int N, double sigma, double l) {
  StageParams p;
  p.K = K;
  p.N = N;
  p.l = l;
  p.lambda = sigma / l;
  return p;
}

SymMatField2 example_target(const Grid2& g) {
  return SymMatField2::scaled_identity(
      resolve(ScalarField::sample(g, [](double x, double y) { return 3.0 + std::sin(x) * std::sin(y); })));
}

}  // namespace

TEST(Ladder, Example) {
  const FrequencyLadder f = ladder(params(2, 2, 2.0, 1.0));
  EXPECT_EQ(f.mu, (std::vector<int>{1, 8, 32}));
  EXPECT_EQ(f.lambda, (std::vector<int>{1, 4, 16}));
  EXPECT_EQ(f.rounding, 0.0);
}

TEST(Ladder, Rejections) {
  EXPECT_THROW(ladder(params(2, 2, 1.0, 1.0)), ParameterError);
  EXPECT_THROW(ladder(params(2, 0, 2.0, 1.0)), ParameterError);
  EXPECT_THROW(ladder(params(0, 2, 2.0, 1.0)), ParameterError);
}

TEST(Ladder, RatiosAndInterleaving) {
  for (int N : {2, 4}) {
    for (int K : {1, 2, 3}) {
      const double sigma = 2.0;
      const StageParams p = params(K, N, sigma, 0.5);
      const FrequencyLadder f = ladder(p);
      EXPECT_EQ(f.rounding, 0.0);
      for (int j = 1; j <= K; ++j) {
        const auto u = static_cast<std::size_t>(j);
        EXPECT_LE(f.mu[u - 1], f.lambda[u]);
        EXPECT_LE(f.lambda[u], f.mu[u]);
        EXPECT_DOUBLE_EQ(double(f.mu[u]) / f.lambda[u], std::pow(sigma, N / 2.0));
        if (j < K) EXPECT_DOUBLE_EQ(double(f.lambda[u + 1]) / f.mu[u], sigma);
      }
      EXPECT_DOUBLE_EQ(double(f.lambda[1]) / f.mu[0], std::pow(sigma, 1.0 + N / 2.0));
    }
  }
  const FrequencyLadder r = ladder(params(2, 3, 2.5, 1.0));
  EXPECT_GT(r.rounding, 0.0);
  for (std::size_t j = 1; j < r.mu.size(); ++j) EXPECT_LE(r.lambda[j], r.mu[j]);
}

TEST(StageParams, Validation) {
  StageParams p = params(2, 2, 2.0, 1.0);
  EXPECT_NO_THROW(p.validate());
  p.sigma0 = 5.0;
  EXPECT_THROW(p.validate(), ParameterError);
  p = params(2, 2, 2.0, 1.0);
  p.s = 1;
  p.beta = 1.0;
  EXPECT_THROW(p.validate(), ParameterError);
  p = params(2, 2, 2.0, 1.0);
  p.majorant = 0.5;
  EXPECT_THROW(p.validate(), ParameterError);
}

TEST(Stage, ResolutionBudget) {
  const Grid2 g(64);
  const StageParams p = params(2, 2, 2.0, 1.0);
  EXPECT_THROW(run_stage(VectorField2(g), AffineVectorField::from_periodic(VectorField2(g)), example_target(g), p),
               ResolutionError);
}

TEST(Stage, SingleStepReducesTheDefect) {
  const Grid2 g(512);
  StageParams p = params(1, 2, 2.0, 1.0);
  p.check_first_corrugation = true;
  const SymMatField2 A = example_target(g);
  const StageResult r = run_stage(VectorField2(g), AffineVectorField::from_periodic(VectorField2(g)), A, p);
  const StageReport& s = r.report;
  EXPECT_LT(s.defect_final, s.defect_input);
  EXPECT_LE(s.max_step_reconstruction, 1e-8);
  EXPECT_LE(s.reconstruction, 1e-8);
  EXPECT_LE(s.steps.front().first_corrugation, 1e-8);
  EXPECT_EQ(s.calibration_rounds, 1);
  EXPECT_NEAR(s.defect_final, sup_norm(defect(r.v, r.w, A)), 1e-12);
  // |φ − φ∗ρ_l| ≤ l²|∇²φ|/2 for a radial kernel, with |∇²(sin x sin y)| ≤ 1 and √2 from the identity.
  EXPECT_LE(s.mollification_error, std::sqrt(2.0) * p.l * p.l);
  const double growth = s.hessian_v * p.l / (std::sqrt(s.defect_input) + p.l * p.majorant);
  EXPECT_LE(growth, 10.0 * std::pow(p.sigma(), p.K + p.N) * std::pow(p.lambda, p.gamma / 2));
}

TEST(Stage, ReportJson) {
  StageReport r;
  r.steps.resize(2);
  r.ladder = ladder(params(1, 2, 2.0, 1.0));
  const nlohmann::json j = r;
  EXPECT_EQ(j["steps"].size(), 2u);
  EXPECT_EQ(j["ladder"]["mu"][1], 8);
}

TEST(Majorant, Definition) {
  const Grid2 g(32);
  EXPECT_EQ(majorant(VectorField2(g), AffineVectorField::from_periodic(VectorField2(g))), 1.0);
  const ScalarField s = resolve(ScalarField::sample(g, [](double x, double) { return 3.0 * std::sin(2.0 * x); }));
  EXPECT_NEAR(majorant(VectorField2(s, ScalarField(g)), AffineVectorField::from_periodic(VectorField2(g))), 12.0,
              1e-10);
}
