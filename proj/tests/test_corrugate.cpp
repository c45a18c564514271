#include <gtest/gtest.h>

#include <cmath>

#include "macorr/calculus.hpp"
#include "macorr/corrugate.hpp"
#include "macorr/norms.hpp"
#include "macorr/profile.hpp"
#include "test_support.hpp"

using namespace macorr;
using macorr::testing::max_abs_diff;
using macorr::testing::random_trig;
using macorr::testing::random_vector;

TEST(Profile, Evaluations) {
  for (double t : {0.0, 0.3, 1.7, 4.0}) {
    EXPECT_NEAR(TrigProfile::gamma()(t), 2.0 * std::sin(t), 1e-15);
    EXPECT_NEAR(TrigProfile::gamma_bar()(t), 0.5 * std::cos(2 * t), 1e-15);
    EXPECT_NEAR(TrigProfile::gamma_bar_bar()(t), -0.5 * std::sin(2 * t), 1e-15);
    EXPECT_NEAR(TrigProfile::gamma_tilde()(t), 1.0 - 0.5 * std::cos(2 * t), 1e-15);
    EXPECT_NEAR(TrigProfile::gamma_tilde_shifted()(t), -0.5 * std::cos(2 * t), 1e-15);
  }
}

TEST(Profile, Antiderivatives) {
  for (double t : {0.0, 0.4, 2.2}) {
    EXPECT_NEAR(antiderivative(TrigProfile::gamma(), 1)(t), -2.0 * std::cos(t), 1e-15);
    EXPECT_NEAR(antiderivative(TrigProfile::gamma_bar(), 2)(t), -0.125 * std::cos(2 * t), 1e-15);
    const TrigProfile p{1.3, 3.0, 0.7, 0.0};
    EXPECT_NEAR(antiderivative(p, 3).derivative(3)(t), p(t), 1e-14);
  }
  EXPECT_THROW(antiderivative(TrigProfile::gamma_tilde(), 1), ParameterError);
}

TEST(Profile, OscillationBudget) {
  const Grid2 g(64);
  EXPECT_THROW(oscillation(g, TrigProfile::gamma_bar(), 9, 1), ResolutionError);
  const ScalarField s = oscillation(g, TrigProfile::gamma(), 16, 2);
  EXPECT_EQ(s.band().k2, 16);
  EXPECT_NEAR(s(0, 3), 2.0 * std::sin(16 * g.coord(3)), 1e-14);
}

TEST(Corrugation, ConstantAmplitudeProducesRankOneMetric) {
  const Grid2 g(128);
  const Corrugation c = corrugation_step(VectorField2(g), AffineVectorField(g), ScalarField::constant(g, 1.0), 4, 1, 1);
  const SymMatField2 m = 0.5 * metric_pullback(c.v) + sym_grad(c.w);
  EXPECT_LT(sup_norm(m - SymMatField2::rank_one(ScalarField::constant(g, 1.0), 1)), 1e-13);
}

TEST(Corrugation, ZeroAmplitudeIsIdentity) {
  const Grid2 g(64);
  std::mt19937_64 rng(1);
  const VectorField2 v = random_vector(g, 4, rng);
  const AffineVectorField w = AffineVectorField::from_periodic(random_vector(g, 4, rng));
  const Corrugation c = corrugation_step(v, w, ScalarField(g), 8, 2, 1);
  EXPECT_EQ(c.v.c1.values(), v.c1.values());
  EXPECT_EQ(c.v.c2.values(), v.c2.values());
  EXPECT_LT(max_abs_diff(c.w.periodic.c1, w.periodic.c1), 1e-15);
  EXPECT_LT(max_abs_diff(c.w.periodic.c2, w.periodic.c2), 1e-15);
}

TEST(Corrugation, StepIdentityOnRandomInputs) {
  const Grid2 g(512);
  std::mt19937_64 rng(99);
  for (int i = 1; i <= 2; ++i) {
    for (int k = 1; k <= 2; ++k) {
      const ScalarField a = random_trig(g, 4, rng) + 3.0;
      const VectorField2 v = random_vector(g, 6, rng);
      const AffineVectorField w = AffineVectorField::from_periodic(random_vector(g, 6, rng));
      EXPECT_LE(step_residual(v, w, a, 8, i, k), 1e-9) << "i=" << i << " k=" << k;
    }
  }
}

TEST(Corrugation, ConstantAmplitudeResidualIsTiny) {
  const Grid2 g(256);
  std::mt19937_64 rng(5);
  const VectorField2 v = random_vector(g, 5, rng);
  const AffineVectorField w = AffineVectorField::from_periodic(random_vector(g, 5, rng));
  EXPECT_LE(step_residual(v, w, ScalarField::constant(g, 2.0), 8, 1, 2), 1e-12);
}

TEST(Corrugation, OtherComponentOnly) {
  const Grid2 g(256);
  std::mt19937_64 rng(6);
  const VectorField2 v(random_trig(g, 5, rng), ScalarField(g));
  const ScalarField a = random_trig(g, 3, rng) + 2.0;
  EXPECT_LE(step_residual(v, AffineVectorField(g), a, 16, 1, 2), 1e-9);
}

TEST(Corrugation, IncrementBounds) {
  const Grid2 g(256);
  std::mt19937_64 rng(12);
  const ScalarField a = random_trig(g, 3, rng) + 2.0;
  const VectorField2 v = random_vector(g, 4, rng);
  const int lam = 16;
  const Corrugation c = corrugation_step(v, AffineVectorField(g), a, lam, 1, 1);
  const VectorField2 dv = c.v - v;
  EXPECT_LE(sup_norm(dv), 2.0 * sup_norm(a) / lam * (1 + 1e-12));
  const VectorField2 ga = gradient(a);
  const double grad_bound = 2.0 * sup_norm(a) + 2.0 * sup_norm(ga) / lam;
  EXPECT_LE(sup_norm(gradient(dv.c1)), grad_bound);
}

TEST(Corrugation, ResolutionBudgetEnforced) {
  const Grid2 g(64);
  EXPECT_THROW(corrugation_step(VectorField2(g), AffineVectorField(g), ScalarField::constant(g, 1.0), 16, 1, 1),
               ResolutionError);
}
