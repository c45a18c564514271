#include <gtest/gtest.h>

#include <cmath>

#include "macorr/calculus.hpp"
#include "macorr/decompose.hpp"
#include "macorr/kallen.hpp"
#include "macorr/norms.hpp"
#include "test_support.hpp"

using namespace macorr;
using macorr::testing::max_abs_diff;
using macorr::testing::random_symmat;

namespace {

/// Random H with sup|∇^m H| ≤ μ^m for m ≤ 4, frequencies ≤ μ/2.
SymMatField2 admissible_h(const Grid2& g, int mu, std::mt19937_64& rng) {
  SymMatField2 H = random_symmat(g, std::max(1, mu / 2), rng);
  double s = 1.0;
  for (int m = 0; m <= 4; ++m) s = std::min(s, std::pow(mu, m) / std::max(cm_norm(H, m), 1e-300));
  return s * H;
}

}  // namespace

TEST(Kallen, ZeroInput) {
  const Grid2 g(32);
  KallenParams p{4.0, 16.0, 0.1, 1, 1.0, 0.1};
  const KallenResult r = kallen_iterate(SymMatField2(g), p);
  EXPECT_LT(max_abs_diff(r.a, ScalarField::constant(g, std::sqrt(p.level()))), 1e-14);
  EXPECT_NEAR(r.psi.M.m11, -p.level(), 1e-14);
  EXPECT_NEAR(r.psi.M.m22, -p.level(), 1e-14);
  EXPECT_LT(sup_norm(r.psi.periodic), 1e-15);
  EXPECT_LT(sup_norm(r.F), 1e-15);
}

TEST(Kallen, ConstantScaledIdentity) {
  const Grid2 g(32);
  for (int N = 1; N <= 3; ++N) {
    KallenParams p{2.0, 8.0, 0.2, N, 3.0, 0.1};
    const double c = 0.4 * p.level();
    const KallenResult r = kallen_iterate(SymMatField2::scaled_identity(ScalarField::constant(g, c)), p);
    EXPECT_LT(max_abs_diff(r.a, ScalarField::constant(g, std::sqrt(p.level() + c))), 1e-13);
    EXPECT_LT(sup_norm(r.F), 1e-15);
  }
}

TEST(Kallen, DefiningIdentityAndTelescoping) {
  const Grid2 g(256);
  std::mt19937_64 rng(5);
  for (int N = 1; N <= 3; ++N) {
    const SymMatField2 H = admissible_h(g, 4, rng);
    const double cbar = calibrate_cbar(H, 4.0, 0.1);
    KallenParams p{4.0, 32.0, 0.1, N, cbar, 0.25 * cbar * std::pow(4.0, 0.1)};
    const KallenResult r = kallen_iterate(H, p);
    EXPECT_LE(kallen_identity_residual(H, r, p.lambda_bar), 1e-9);
    for (double t : r.telescoping) EXPECT_LE(t, 1e-9);
    EXPECT_GE(r.a2_min, 0.5 * p.level());
    EXPECT_LE(r.a2_max, 1.5 * p.level());
  }
}

TEST(Kallen, IncrementsHalveEachRound) {
  const Grid2 g(256);
  std::mt19937_64 rng(6);
  const SymMatField2 H = admissible_h(g, 4, rng);
  const double cbar = calibrate_cbar(H, 4.0, 0.1);
  const KallenResult r = kallen_iterate(H, {4.0, 32.0, 0.1, 3, cbar, 0.0});
  for (std::size_t i = 1; i < r.increments.size(); ++i) EXPECT_LE(r.increments[i], 0.5 * r.increments[i - 1]);
}

TEST(Kallen, PositivityFailureReportsRound) {
  const Grid2 g(64);
  const ScalarField h = resolve(ScalarField::sample(g, [](double x, double) { return -5.0 * std::cos(x); }));
  KallenParams p{1.0, 8.0, 0.1, 2, 1.0, 0.5};
  try {
    kallen_iterate(SymMatField2::scaled_identity(h), p);
    FAIL() << "expected a calibration error";
  } catch (const CalibrationError& e) {
    EXPECT_EQ(e.round(), 1);
    EXPECT_NEAR(e.min_value(), -4.0, 1e-12);
  }
}

TEST(Kallen, ParameterValidation) {
  const Grid2 g(16);
  EXPECT_THROW(kallen_iterate(SymMatField2(g), {4.0, 2.0, 0.1, 1, 1.0, 0.0}), ParameterError);
  EXPECT_THROW(kallen_iterate(SymMatField2(g), {1.0, 2.0, 1.5, 1, 1.0, 0.0}), ParameterError);
  EXPECT_THROW(kallen_iterate(SymMatField2(g), {1.0, 2.0, 0.1, 0, 1.0, 0.0}), ParameterError);
}

TEST(CalibrateCbar, Cases) {
  const Grid2 g(32);
  EXPECT_EQ(calibrate_cbar(SymMatField2(g), 4.0, 0.1), 1.0);
  const double c = 3.0;
  EXPECT_NEAR(calibrate_cbar(SymMatField2::scaled_identity(ScalarField::constant(g, c)), 4.0, 0.5), 4.0 * c / 2.0, 1e-14);
  std::mt19937_64 rng(8);
  const SymMatField2 H = 5.0 * random_symmat(g, 3, rng);
  const double cbar = calibrate_cbar(H, 2.0, 0.1);
  const ScalarField a1 = diagonal_decompose(H).a + cbar * std::pow(2.0, 0.1);
  EXPECT_GE(a1.min(), 0.75 * cbar * std::pow(2.0, 0.1));
}

TEST(Kallen, MeasuredRateIsTwiceTheIterationCount) {
  // At fixed μ the residual 𝓕 decays like (λ̄/μ)^{−2N}.
  const Grid2 g(512);
  std::mt19937_64 rng(10);
  const int mu = 4;
  const SymMatField2 H = admissible_h(g, mu, rng);
  const double cbar = calibrate_cbar(H, mu, 0.1);
  for (int N = 1; N <= 3; ++N) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int ratio : {4, 8, 16}) {
      const KallenResult r = kallen_iterate(H, {double(mu), double(mu * ratio), 0.1, N, cbar, 0.0});
      const double x = std::log(ratio);
      const double y = std::log(sup_norm(r.F));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double slope = (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
    EXPECT_NEAR(slope, -2.0 * N, 0.2 * 2.0 * N) << "N = " << N;
  }
}
