#include "macorr/quadstep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "macorr/calculus.hpp"
#include "macorr/corrugate.hpp"
#include "macorr/ibp.hpp"
#include "macorr/kallen.hpp"
#include "macorr/norms.hpp"
#include "macorr/profile.hpp"
#include "macorr/spectral.hpp"

namespace macorr {

void QuadParams::validate() const {
  if (!(gamma > 0.0 && gamma < 1.0)) throw ParameterError("gamma must lie in (0,1)");
  if (N < 1) throw ParameterError("N must be at least 1");
  if (!(1 <= mu_prev && mu_prev <= lambda_j && lambda_j <= mu_j && mu_j <= lambda_next && lambda_next <= mu_next))
    throw ParameterError("frequencies must satisfy 1 <= mu_prev <= lambda_j <= mu_j <= lambda_next <= mu_next, got " +
                         std::to_string(mu_prev) + ", " + std::to_string(lambda_j) + ", " + std::to_string(mu_j) +
                         ", " + std::to_string(lambda_next) + ", " + std::to_string(mu_next));
  if (!(c_tilde > 0.0) || !(balance > 0.0)) throw ParameterError("scale constants must be positive");
  if (check_balance) {
    const double lhs = std::sqrt(balance / c_tilde);
    const double rhs = std::min(double(mu_j) / lambda_j, double(mu_next) / lambda_next);
    if (lhs > rhs * (1.0 + 1e-9))
      throw ParameterError("balance condition violated: (B/C)^(1/2) = " + std::to_string(lhs) + " > " +
                           std::to_string(rhs));
  }
}

double QuadParams::amplitude_scale() const { return std::sqrt(c_tilde) * std::pow(mu_j, 0.5 * gamma); }

void to_json(nlohmann::json& j, const DefectReport& r) {
  j = nlohmann::json{{"defect", r.defect},
                     {"F", r.F},
                     {"G", r.G},
                     {"H", r.H},
                     {"I", r.I},
                     {"previous_defect", r.previous_defect},
                     {"dv_sup", r.dv_sup},
                     {"dv_c1", r.dv_c1},
                     {"dw_sup", r.dw_sup},
                     {"dw_c1", r.dw_c1},
                     {"anisotropy", r.anisotropy},
                     {"reconstruction", r.reconstruction},
                     {"cbar", r.cbar},
                     {"a2_min", r.a2_min},
                     {"a2_max", r.a2_max},
                     {"b2_min", r.b2_min},
                     {"b2_max", r.b2_max},
                     {"kallen_increments", r.kallen_increments}};
  if (r.first_corrugation >= 0.0) j["first_corrugation"] = r.first_corrugation;
}

std::array<double, 6> anisotropy_report(const VectorField2& v, const QuadParams& p) {
  const double lam = p.lambda_next;
  const double mu = p.mu_j;
  const double mun = p.mu_next;
  const std::array<double, 6> slot = {lam, mu, mu * mu / lam, lam * lam / mun, lam, mun};
  const DerivativeCache d1(v.c1);
  const DerivativeCache d2(v.c2);
  const std::array<double, 6> raw = {sup_norm(d1(2, 0)), sup_norm(d1(1, 1)), sup_norm(d1(0, 2)),
                                     sup_norm(d2(2, 0)), sup_norm(d2(1, 1)), sup_norm(d2(0, 2))};
  const double scale = p.amplitude_scale();
  std::array<double, 6> out{};
  for (std::size_t i = 0; i < 6; ++i) out[i] = raw[i] / (scale * slot[i]);
  return out;
}

QuadResult quad_step(const VectorField2& v, const AffineVectorField& w, const SymMatField2& A0, const QuadParams& p) {
  p.validate();
  require_same_grid(v.grid(), A0.grid());
  const Grid2& g = A0.grid();
  const int lambda = p.lambda_next;
  const int mup = p.mu_next;
  const double lam = lambda;
  const double mu2 = double(mup) * mup;
  DefectReport rep;

  const SymMatField2 Dj = defect(v, w, A0);
  rep.previous_defect = sup_norm(Dj);

  // Källén on the normalized defect.
  const SymMatField2 H = (1.0 / p.c_tilde) * Dj;
  rep.cbar = calibrate_cbar(H, p.mu_j, p.gamma);
  KallenParams kp{double(p.mu_j), lam, p.gamma, p.N, rep.cbar, 0.0};
  kp.positivity_floor = 0.25 * kp.level();
  KallenResult k = kallen_iterate(H, kp);
  const ScalarField a = std::sqrt(p.c_tilde) * k.a;
  const AffineVectorField psi = p.c_tilde * k.psi;
  const SymMatField2 F = p.c_tilde * k.F;
  rep.kallen_increments = k.increments;
  for (double& x : rep.kallen_increments) x *= p.c_tilde;
  rep.a2_min = p.c_tilde * k.a2_min;
  rep.a2_max = p.c_tilde * k.a2_max;

  // First corrugation along x1 in component 1.
  Corrugation c1 = corrugation_step(v, w, a, lambda, 1, 1);
  c1.w += psi;
  const SymMatField2 Hv1 = hessian(v.c1);
  const SymMatField2 Ha = hessian(a);
  const VectorField2 da = gradient(a);
  const SymMatField2 daa = outer(da);
  const double scale = std::max(rep.previous_defect, sup_norm(a * a));

  if (p.check_first_corrugation) {
    const ScalarField G = oscillation(g, TrigProfile::gamma(), lambda, 1);
    const ScalarField Gb = oscillation(g, TrigProfile::gamma_bar(), lambda, 1);
    const ScalarField Gt = oscillation(g, TrigProfile::gamma_tilde_shifted(), lambda, 1);
    SymMatField2 rhs = SymMatField2::rank_one(a * a, 2) - F;
    rhs += (1.0 / lam) * ((a * G) * Hv1);
    rhs -= (1.0 / (lam * lam)) * ((a * Gb) * Ha);
    rhs -= (1.0 / (lam * lam)) * (Gt * daa);
    rep.first_corrugation = sup_norm(defect(c1.v, c1.w, A0) - rhs) / scale;
  }

  // Order-N cancellation of the three oscillatory terms.
  ScalarField Gcorr(g);
  SymMatField2 calG(g);
  AffineVectorField W2 = c1.w;
  {
    const IbpOutput i1 = ibp_decompose(a * Hv1, lambda, TrigProfile::gamma(), p.N, 1);
    Gcorr += i1.rank_one_scalar;
    calG += i1.tail;
    W2 += i1.w_correction;
  }
  {
    const IbpOutput i2 = ibp_decompose(a * Ha, lambda, TrigProfile::gamma_bar(), p.N, 1);
    const IbpOutput i3 = ibp_decompose(daa, lambda, TrigProfile::gamma_tilde_shifted(), p.N, 1);
    Gcorr -= (1.0 / lam) * (i2.rank_one_scalar + i3.rank_one_scalar);
    calG -= (1.0 / lam) * (i2.tail + i3.tail);
    W2 -= (1.0 / lam) * (i2.w_correction + i3.w_correction);
  }

  // Second amplitude.
  const ScalarField b2 = a * a + Gcorr;
  rep.b2_min = b2.min();
  rep.b2_max = b2.max();
  const double b_floor = 0.25 * rep.cbar * p.c_tilde * std::pow(p.mu_j, p.gamma);
  if (rep.b2_min < b_floor)
    throw CalibrationError("second amplitude square below floor: min " + std::to_string(rep.b2_min) + " < " +
                               std::to_string(b_floor),
                           p.N + 1, rep.b2_min);
  const ScalarField b = sqrt_field(b2);

  // Second corrugation along x2 in component 2.
  Corrugation c3 = corrugation_step(c1.v, W2, b, mup, 2, 2);
  const VectorField2 db = gradient(b);
  SymMatField2 calH = (1.0 / mu2) * ((b * oscillation(g, TrigProfile::gamma_bar(), mup, 2)) * hessian(b));
  calH += (1.0 / mu2) * (oscillation(g, TrigProfile::gamma_tilde(), mup, 2) * outer(db));

  // Order-1 cancellation of the remaining oscillatory term.
  IbpOutput i4 = ibp_decompose(b * hessian(v.c2), mup, TrigProfile::gamma(), 1, 2);
  c3.w += i4.w_correction;
  const SymMatField2 calI = i4.tail + SymMatField2::rank_one(i4.rank_one_scalar, 1);

  SymMatField2 D = defect(c3.v, c3.w, A0);
  const SymMatField2 predicted = calG - F - calH + calI;
  rep.reconstruction = sup_norm(D - predicted) / scale;
  rep.defect = sup_norm(D);
  rep.F = sup_norm(F);
  rep.G = sup_norm(calG);
  rep.H = sup_norm(calH);
  rep.I = sup_norm(calI);
  const VectorField2 dv = c3.v - v;
  const AffineVectorField dw = c3.w - w;
  rep.dv_sup = sup_norm(dv);
  rep.dv_c1 = c1_norm(dv);
  rep.dw_sup = sup_norm(dw);
  rep.dw_c1 = c1_norm(dw);
  rep.anisotropy = anisotropy_report(c3.v, p);
  return {std::move(c3.v), std::move(c3.w), std::move(D), std::move(rep)};
}

}  // namespace macorr
