#include "macorr/ibp.hpp"

#include <algorithm>
#include <cmath>

#include "macorr/calculus.hpp"
#include "macorr/norms.hpp"

namespace macorr {

IbpCoefficients ibp_coefficients(const SymMatField2& H, int k, int axis) {
  if (k < 0) throw ParameterError("IBP order must be non-negative");
  if (axis != 1 && axis != 2) throw ParameterError("axis must be 1 or 2");
  // Along axis 2 the formulas are those of axis 1 with x1 ↔ x2 and H11 ↔ H22.
  const ScalarField& along = axis == 1 ? H.e11 : H.e22;
  const ScalarField& across = axis == 1 ? H.e22 : H.e11;
  const DerivativeCache dA(along);
  const DerivativeCache d12(H.e12);
  auto d = [axis](const DerivativeCache& c, int p_along, int p_across) {
    return axis == 1 ? c(p_along, p_across) : c(p_across, p_along);
  };
  IbpCoefficients out;
  for (int i = 0; i <= k; ++i) {
    ScalarField first = d(dA, i, 0);
    ScalarField second = 2.0 * d(d12, i, 0);
    if (i >= 1) second += static_cast<double>(i) * d(dA, i - 1, 1);
    ScalarField p = i == 0 ? resolve(across) : 2.0 * d(d12, i - 1, 1);
    if (i >= 2) p += static_cast<double>(i - 1) * d(dA, i - 2, 2);
    if (axis == 1) {
      out.L.emplace_back(std::move(first), std::move(second));
    } else {
      out.L.emplace_back(std::move(second), std::move(first));
    }
    out.P.push_back(std::move(p));
  }
  return out;
}

namespace {

std::vector<IbpOutput> decompose_upto(const SymMatField2& H, int lambda, const TrigProfile& g0, int k_max, int axis,
                                      bool every_order) {
  if (!g0.zero_mean()) throw ParameterError("IBP profile must have zero mean");
  if (g0.frequency < 1.0) throw ParameterError("IBP profile frequency multiplier must be at least 1");
  const Grid2& g = H.grid();
  const IbpCoefficients c = ibp_coefficients(H, k_max, axis);
  const double lam = lambda;
  VectorField2 wc(g);
  ScalarField r(g);
  std::vector<IbpOutput> out;
  ScalarField gi = oscillation(g, antiderivative(g0, 0), lambda, axis);
  for (int i = 0; i <= k_max; ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    const auto u = static_cast<std::size_t>(i);
    ScalarField gi1 = oscillation(g, antiderivative(g0, i + 1), lambda, axis);
    wc += (sign / std::pow(lam, i + 2)) * (gi1 * c.L[u]);
    r += (sign / std::pow(lam, i + 1)) * (gi * c.P[u]);
    if (every_order || i == k_max) {
      SymMatField2 tail = (-sign / std::pow(lam, i + 2)) * (gi1 * sym_grad(c.L[u]));
      out.push_back({AffineVectorField::from_periodic(wc), r, std::move(tail), axis});
    }
    gi = std::move(gi1);
  }
  return out;
}

}  // namespace

std::vector<IbpOutput> ibp_decompose_orders(const SymMatField2& H, int lambda, const TrigProfile& g0, int k_max,
                                           int axis) {
  if (k_max < 0) throw ParameterError("IBP order must be non-negative");
  return decompose_upto(H, lambda, g0, k_max, axis, true);
}

IbpOutput ibp_decompose(const SymMatField2& H, int lambda, const TrigProfile& g0, int k, int axis) {
  if (k < 0) throw ParameterError("IBP order must be non-negative");
  std::vector<IbpOutput> all = decompose_upto(H, lambda, g0, k, axis, false);
  return std::move(all.back());
}

SymMatField2 ibp_target(const SymMatField2& H, int lambda, const TrigProfile& g0, int axis) {
  return (1.0 / lambda) * (oscillation(H.grid(), g0, lambda, axis) * H);
}

double ibp_residual(const SymMatField2& H, int lambda, const TrigProfile& g0, int axis, const IbpOutput& out) {
  return ibp_residual(ibp_target(H, lambda, g0, axis), out);
}

double ibp_residual(const SymMatField2& lhs, const IbpOutput& out) {
  const SymMatField2 rhs = out.tail + sym_grad(out.w_correction) + SymMatField2::rank_one(out.rank_one_scalar, out.direction());
  const double scale = std::max(sup_norm(lhs), sup_norm(rhs));
  const double res = sup_norm(lhs - rhs);
  return scale > 0.0 ? res / scale : res;
}

}  // namespace macorr
