#include "macorr/corrugate.hpp"

#include <algorithm>

#include "macorr/calculus.hpp"
#include "macorr/norms.hpp"
#include "macorr/profile.hpp"

namespace macorr {
namespace {

void check_indices(int lambda, int i, int k) {
  if (lambda < 1) throw ParameterError("corrugation frequency must be a positive integer");
  if ((i != 1 && i != 2) || (k != 1 && k != 2)) throw ParameterError("axis and codimension must be 1 or 2");
}

}  // namespace

Corrugation corrugation_step(const VectorField2& v, const AffineVectorField& w, const ScalarField& a, int lambda,
                             int i, int k) {
  check_indices(lambda, i, k);
  const Grid2& g = a.grid();
  const double lam = lambda;
  const ScalarField G = oscillation(g, TrigProfile::gamma(), lambda, i);
  const ScalarField Gb = oscillation(g, TrigProfile::gamma_bar(), lambda, i);
  const ScalarField Gbb = oscillation(g, TrigProfile::gamma_bar_bar(), lambda, i);
  const ScalarField aG = a * G;

  VectorField2 vt = v;
  vt[k] += aG / lam;

  VectorField2 dw = -(1.0 / lam) * (aG * gradient(v[k]));
  dw += (1.0 / (lam * lam)) * ((a * Gb) * gradient(a));
  dw[i] += ((a * a) * Gbb) / lam;
  AffineVectorField wt = w;
  wt += dw;
  return {std::move(vt), std::move(wt)};
}

StepIdentity step_identity(const VectorField2& v, const AffineVectorField& w, const ScalarField& a, int lambda, int i,
                           int k) {
  const Corrugation c = corrugation_step(v, w, a, lambda, i, k);
  const Grid2& g = a.grid();
  const double lam = lambda;
  const ScalarField a2 = a * a;
  SymMatField2 lhs = 0.5 * metric_pullback(c.v) + sym_grad(c.w) - 0.5 * metric_pullback(v) - sym_grad(w) -
                     SymMatField2::rank_one(a2, i);

  const ScalarField G = oscillation(g, TrigProfile::gamma(), lambda, i);
  const ScalarField Gb = oscillation(g, TrigProfile::gamma_bar(), lambda, i);
  const ScalarField Gt = oscillation(g, TrigProfile::gamma_tilde(), lambda, i);
  SymMatField2 rhs = -(1.0 / lam) * ((a * G) * hessian(v[k]));
  rhs += (1.0 / (lam * lam)) * ((a * Gb) * hessian(a));
  rhs += (1.0 / (lam * lam)) * (Gt * outer(gradient(a)));
  const double scale = std::max({sup_norm(a2), sup_norm(lhs), sup_norm(rhs)});
  return {std::move(lhs), std::move(rhs), scale};
}

double step_residual(const VectorField2& v, const AffineVectorField& w, const ScalarField& a, int lambda, int i, int k) {
  const StepIdentity s = step_identity(v, w, a, lambda, i, k);
  const double r = sup_norm(s.lhs - s.rhs);
  return s.scale > 0.0 ? r / s.scale : r;
}

}  // namespace macorr
