#include "macorr/kallen.hpp"

#include <cmath>
#include <sstream>

#include "macorr/calculus.hpp"
#include "macorr/decompose.hpp"
#include "macorr/norms.hpp"

namespace macorr {

void KallenParams::validate() const {
  if (!(mu >= 1.0 && lambda_bar >= mu)) throw ParameterError("Kallen frequencies must satisfy lambda_bar >= mu >= 1");
  if (!(gamma > 0.0 && gamma < 1.0)) throw ParameterError("gamma must lie in (0, 1)");
  if (N < 1) throw ParameterError("Kallen iteration count must be at least 1");
  if (!(cbar > 0.0)) throw ParameterError("positivity constant must be positive");
}

double KallenParams::level() const { return cbar * std::pow(mu, gamma); }

KallenResult kallen_iterate(const SymMatField2& H, const KallenParams& p) {
  p.validate();
  const Grid2& g = H.grid();
  const double level = p.level();
  const double inv_lb2 = 1.0 / (p.lambda_bar * p.lambda_bar);
  SymMatField2 E_prev(g);
  SymMatField2 E_prev_prev(g);
  ScalarField a(g);
  ScalarField a2(g);
  AffineVectorField psi(g);
  KallenResult out{ScalarField(g), AffineVectorField(g), SymMatField2(g), {}, {}, 0.0, 0.0};
  for (int i = 1; i <= p.N; ++i) {
    const SymMatField2 target = H - E_prev;
    Decomposition d = diagonal_decompose(target);
    a2 = d.a + level;
    const double lo = a2.min();
    if (lo < p.positivity_floor) {
      std::ostringstream msg;
      msg << "amplitude square fell to " << lo << " below the floor " << p.positivity_floor << " in round " << i
          << "; increase the positivity constant or the frequency ratio";
      throw CalibrationError(msg.str(), i, lo);
    }
    psi = -1.0 * d.psi;
    psi.M = psi.M + Mat2::identity(-level);
    a = sqrt_field(a2);
    SymMatField2 E = inv_lb2 * outer(gradient(a));
    out.increments.push_back(sup_norm(E - E_prev));
    const SymMatField2 tel = SymMatField2::scaled_identity(a2) + sym_grad(psi) + E_prev - H;
    out.telescoping.push_back(sup_norm(tel) / std::max(sup_norm(a2), 1e-300));
    E_prev_prev = std::move(E_prev);
    E_prev = std::move(E);
  }
  out.a2_min = a2.min();
  out.a2_max = a2.max();
  out.F = E_prev - E_prev_prev;
  out.a = std::move(a);
  out.psi = std::move(psi);
  return out;
}

double calibrate_cbar(const SymMatField2& H, double mu, double gamma) {
  const Decomposition d = diagonal_decompose(H);
  return std::max(4.0 * sup_norm(d.a) / std::pow(mu, gamma), 1.0);
}

double kallen_identity_residual(const SymMatField2& H, const KallenResult& r, double lambda_bar) {
  const ScalarField a2 = r.a * r.a;
  const SymMatField2 lhs = SymMatField2::scaled_identity(a2) + sym_grad(r.psi) - H +
                           (1.0 / (lambda_bar * lambda_bar)) * outer(gradient(r.a)) - r.F;
  return sup_norm(lhs) / std::max(sup_norm(a2), 1e-300);
}

}  // namespace macorr
