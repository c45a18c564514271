#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "macorr/fields.hpp"
#include "macorr/norms.hpp"
#include "macorr/spectral.hpp"

namespace macorr {

/// Random real trigonometric polynomial with |k1|,|k2| ≤ kmax, coefficients decaying like 1/(1+|k|²).
inline ScalarField random_trig(const Grid2& g, int kmax, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Spectrum s(g);
  const int n = g.n();
  for (int k1 = -kmax; k1 <= kmax; ++k1) {
    for (int k2 = 0; k2 <= kmax; ++k2) {
      if (k2 == 0 && k1 < 0) continue;
      const double w = scale / (1.0 + k1 * k1 + k2 * k2);
      const Complex z(w * normal(rng), (k1 == 0 && k2 == 0) ? 0.0 : w * normal(rng));
      const int r = (k1 + n) % n;
      s.at(r, k2) = z;
      if (k2 == 0) s.at((n - k1) % n, 0) = std::conj(z);
    }
  }
  return inverse(s, {kmax, kmax});
}

inline VectorField2 random_vector(const Grid2& g, int kmax, std::mt19937_64& rng, double scale = 1.0) {
  ScalarField a = random_trig(g, kmax, rng, scale);
  ScalarField b = random_trig(g, kmax, rng, scale);
  return {std::move(a), std::move(b)};
}

inline SymMatField2 random_symmat(const Grid2& g, int kmax, std::mt19937_64& rng, double scale = 1.0) {
  ScalarField a = random_trig(g, kmax, rng, scale);
  ScalarField b = random_trig(g, kmax, rng, scale);
  ScalarField c = random_trig(g, kmax, rng, scale);
  return {std::move(a), std::move(b), std::move(c)};
}

/// Random H with sup|∇^m H| ≤ μ^m for m ≤ 4 and frequencies ≤ μ/2.
inline SymMatField2 admissible_symmat(const Grid2& g, int mu, std::mt19937_64& rng) {
  SymMatField2 H = random_symmat(g, std::max(1, mu / 2), rng);
  double s = 1.0;
  for (int m = 0; m <= 4; ++m) s = std::min(s, std::pow(mu, m) / std::max(cm_norm(H, m), 1e-300));
  return s * H;
}

}  // namespace macorr
