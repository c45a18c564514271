#include <gtest/gtest.h>

#include <cmath>

#include "macorr/calculus.hpp"
#include "macorr/norms.hpp"
#include "macorr/quadstep.hpp"
#include "test_support.hpp"

using namespace macorr;
using macorr::testing::random_symmat;
using macorr::testing::random_trig;
using macorr::testing::random_vector;

namespace {

QuadParams first_step(int ratio, int N) {
  QuadParams p;
  p.gamma = 0.1;
  p.N = N;
  p.mu_prev = p.lambda_j = p.mu_j = 1;
  p.lambda_next = ratio;
  p.mu_next = ratio * static_cast<int>(std::lround(std::pow(ratio, 0.5 * N)));
  p.check_first_corrugation = true;
  return p;
}

AffineVectorField zero_w(const Grid2& g) { return AffineVectorField::from_periodic(VectorField2(g)); }

/// Smooth positive definite target with low frequencies.
SymMatField2 smooth_target(const Grid2& g, std::mt19937_64& rng) {
  SymMatField2 A = 0.3 * random_symmat(g, 2, rng);
  A.e11 += 3.0;
  A.e22 += 3.0;
  return A;
}

}  // namespace

TEST(QuadParams, Validation) {
  QuadParams p = first_step(4, 2);
  p.c_tilde = p.balance = 1.0;
  EXPECT_NO_THROW(p.validate());
  QuadParams bad = p;
  bad.lambda_next = 1;
  bad.mu_j = 2;
  EXPECT_THROW(bad.validate(), ParameterError);
  bad = p;
  bad.balance = 100.0;
  EXPECT_THROW(bad.validate(), ParameterError);
  bad.check_balance = false;
  EXPECT_NO_THROW(bad.validate());
  bad = p;
  bad.c_tilde = 0.0;
  EXPECT_THROW(bad.validate(), ParameterError);
}

TEST(QuadStep, ConstantTargetIsCancelled) {
  const Grid2 g(1024);
  const double c = 2.5;
  QuadParams p = first_step(8, 2);
  p.c_tilde = p.balance = 2.0 * c;
  const SymMatField2 A = SymMatField2::scaled_identity(ScalarField::constant(g, c));
  const QuadResult r = quad_step(VectorField2(g), zero_w(g), A, p);
  EXPECT_LE(r.report.defect / c, 0.25);
  EXPECT_LE(r.report.reconstruction, 1e-8);
  EXPECT_LE(r.report.first_corrugation, 1e-8);
}

TEST(QuadStep, DefectFreeInput) {
  const Grid2 g(512);
  std::mt19937_64 rng(21);
  const VectorField2 v = 0.2 * random_vector(g, 2, rng);
  const AffineVectorField w = AffineVectorField::from_periodic(0.2 * random_vector(g, 2, rng));
  const SymMatField2 A = 0.5 * metric_pullback(v) + sym_grad(w);
  QuadParams p;
  p.N = 2;
  p.mu_prev = 1;
  p.lambda_j = p.mu_j = 2;
  p.lambda_next = 8;
  p.mu_next = 32;
  p.c_tilde = p.balance = 1.0;
  p.check_balance = false;
  p.check_first_corrugation = true;
  const QuadResult r = quad_step(v, w, A, p);
  EXPECT_NEAR(r.report.a2_min, r.report.a2_max, 1e-9);
  EXPECT_NEAR(r.report.a2_min, r.report.cbar * std::pow(2.0, 0.1), 1e-9);
  EXPECT_LE(r.report.F, 1e-14);
  EXPECT_LE(r.report.reconstruction, 1e-8);
  EXPECT_LE(r.report.first_corrugation, 1e-8);
  for (double x : {r.report.defect, r.report.G, r.report.H, r.report.I}) EXPECT_TRUE(std::isfinite(x));
}

TEST(QuadStep, ReconstructionAndBoundsOnRandomInputs) {
  const Grid2 g(512);
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 3; ++trial) {
    const SymMatField2 A = smooth_target(g, rng);
    const VectorField2 v = 0.1 * random_vector(g, 2, rng);
    const AffineVectorField w = zero_w(g);
    QuadParams p;
    p.N = 2;
    p.mu_prev = 1;
    p.lambda_j = 2;
    p.mu_j = 2;
    p.lambda_next = 8;
    p.mu_next = 32;
    p.c_tilde = 2.0 * sup_norm(defect(v, w, A));
    p.balance = p.c_tilde;
    p.check_first_corrugation = true;
    const QuadResult r = quad_step(v, w, A, p);
    const DefectReport& d = r.report;
    EXPECT_LE(d.reconstruction, 1e-8);
    EXPECT_LE(d.first_corrugation, 1e-8);
    EXPECT_LE(d.defect, d.F + d.G + d.H + d.I + 1e-9);
    const double level = d.cbar * p.c_tilde * std::pow(p.mu_j, p.gamma);
    EXPECT_GE(d.b2_min, 0.25 * level);
    EXPECT_LE(d.b2_max, 2.0 * level);
    EXPECT_LE(d.dv_c1, 10.0 * p.amplitude_scale());
    EXPECT_LT(d.defect, d.previous_defect);
  }
}

TEST(QuadStep, PositivityFailureOfSecondAmplitude) {
  const Grid2 g(256);
  std::mt19937_64 rng(23);
  // Large ∂22v¹ makes the corrector G dominate a² at a small frequency ratio.
  const ScalarField s = ScalarField::sample(g, [](double, double y) { return 40.0 * std::sin(3.0 * y); });
  const VectorField2 v(resolve(s), ScalarField(g));
  const SymMatField2 A = smooth_target(g, rng) + 0.5 * metric_pullback(v);
  QuadParams p;
  p.N = 1;
  p.mu_prev = p.lambda_j = p.mu_j = 1;
  p.lambda_next = 2;
  p.mu_next = 4;
  p.c_tilde = p.balance = 0.05;
  p.check_balance = false;
  EXPECT_THROW(quad_step(v, zero_w(g), A, p), CalibrationError);
}

TEST(Anisotropy, ZeroField) {
  const Grid2 g(64);
  QuadParams p = first_step(4, 2);
  for (double x : anisotropy_report(VectorField2(g), p)) EXPECT_EQ(x, 0.0);
}

TEST(Anisotropy, SingleCorrugation) {
  const Grid2 g(128);
  QuadParams p = first_step(8, 2);
  const int lam = p.lambda_next;
  const ScalarField s = resolve(ScalarField::sample(g, [lam](double x, double) { return 2.0 / lam * std::sin(lam * x); }));
  const auto r = anisotropy_report(VectorField2(s, ScalarField(g)), p);
  EXPECT_NEAR(r[0], 2.0 / p.amplitude_scale(), 1e-10);
  EXPECT_LT(r[1], 1e-10);
  EXPECT_LT(r[2], 1e-10);
  for (int i = 3; i < 6; ++i) EXPECT_EQ(r[static_cast<std::size_t>(i)], 0.0);
}

TEST(Anisotropy, SlotsSeparateOnAQuadStepOutput) {
  const Grid2 g(512);
  std::mt19937_64 rng(24);
  const SymMatField2 A = smooth_target(g, rng);
  QuadParams p = first_step(4, 2);
  p.c_tilde = p.balance = 2.0 * sup_norm(A);
  const QuadResult r = quad_step(VectorField2(g), zero_w(g), A, p);
  const auto& s = r.report.anisotropy;
  const double lam = p.lambda_next;
  const double mu = p.mu_j;
  // Raw sup|∂11v¹| against raw sup|∂22v¹|.
  const double raw11 = s[0] * lam;
  const double raw22 = s[2] * mu * mu / lam;
  EXPECT_GE(raw11 / raw22, 0.5 * lam / mu);
  for (double x : s) EXPECT_LT(x, 10.0);
}

TEST(DefectReport, Json) {
  DefectReport r;
  r.defect = 0.5;
  nlohmann::json j = r;
  EXPECT_EQ(j["defect"], 0.5);
  EXPECT_FALSE(j.contains("first_corrugation"));
  EXPECT_EQ(j["anisotropy"].size(), 6u);
  r.first_corrugation = 1e-12;
  j = r;
  EXPECT_TRUE(j.contains("first_corrugation"));
}
