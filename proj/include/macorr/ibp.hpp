#pragma once

#include <vector>

#include "macorr/fields.hpp"
#include "macorr/profile.hpp"

namespace macorr {

struct IbpCoefficients {
  std::vector<VectorField2> L;
  std::vector<ScalarField> P;
};

/// L_0..L_k and P_0..P_k. Along axis 1:
///   L_0 = (H11, 2H12), P_0 = H22,
///   L_i = (∂₁ⁱH11, 2∂₁ⁱH12 + i∂₁ⁱ⁻¹∂₂H11), P_i = 2∂₁ⁱ⁻¹∂₂H12 + (i−1)∂₁ⁱ⁻²∂₂²H11.
/// Along axis 2 the roles of the indices are mirrored.
IbpCoefficients ibp_coefficients(const SymMatField2& H, int k, int axis);

/// Γ₀(λx)/λ·H = tail + sym∇(w_correction) + rank_one_scalar·e⊗e, e = e₂ for axis 1 and e₁ for axis 2.
struct IbpOutput {
  AffineVectorField w_correction;
  ScalarField rank_one_scalar;
  SymMatField2 tail;
  int axis;

  /// The rank-one direction index.
  int direction() const { return axis == 1 ? 2 : 1; }
};

IbpOutput ibp_decompose(const SymMatField2& H, int lambda, const TrigProfile& g0, int k, int axis);

/// The decompositions for k = 0..k_max, sharing coefficients and partial sums.
std::vector<IbpOutput> ibp_decompose_orders(const SymMatField2& H, int lambda, const TrigProfile& g0, int k_max,
                                           int axis);

/// Γ₀(λx)/λ·H.
SymMatField2 ibp_target(const SymMatField2& H, int lambda, const TrigProfile& g0, int axis);

/// Relative sup residual of the decomposition identity.
double ibp_residual(const SymMatField2& H, int lambda, const TrigProfile& g0, int axis, const IbpOutput& out);
/// Same, against a precomputed ibp_target.
double ibp_residual(const SymMatField2& target, const IbpOutput& out);

}  // namespace macorr
