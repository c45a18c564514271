#pragma once

#include "macorr/fields.hpp"

namespace macorr {

struct Corrugation {
  VectorField2 v;
  AffineVectorField w;
};

/// ṽ = v + (a/λ)Γ(λx_i)e_k,
/// w̃ = w − (a/λ)Γ(λx_i)∇v^k + (a/λ²)Γ̄(λx_i)∇a + (a²/λ)Γ̄̄(λx_i)e_i.
Corrugation corrugation_step(const VectorField2& v, const AffineVectorField& w, const ScalarField& a, int lambda,
                             int i, int k);

/// Both sides of the step identity:
/// lhs = [½(∇ṽ)ᵀ∇ṽ + sym∇w̃] − [½(∇v)ᵀ∇v + sym∇w] − a²e_i⊗e_i,
/// rhs = −(a/λ)Γ∇²v^k + (a/λ²)Γ̄∇²a + (1/λ²)Γ̃∇a⊗∇a.
struct StepIdentity {
  SymMatField2 lhs;
  SymMatField2 rhs;
  double scale;
};

StepIdentity step_identity(const VectorField2& v, const AffineVectorField& w, const ScalarField& a, int lambda, int i,
                           int k);

/// sup|lhs − rhs| relative to max(sup a², sup|lhs|, sup|rhs|).
double step_residual(const VectorField2& v, const AffineVectorField& w, const ScalarField& a, int lambda, int i, int k);

}  // namespace macorr
