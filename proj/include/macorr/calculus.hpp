#pragma once

#include "macorr/spectral.hpp"

namespace macorr {

/// ∂₁^t ∂₂^s f, exact on the trigonometric interpolant.
ScalarField derivative(const ScalarField& f, int t, int s);

/// Holds one forward transform so that many derivatives of f cost one inverse each.
class DerivativeCache {
 public:
  explicit DerivativeCache(const ScalarField& f);
  ScalarField operator()(int t, int s) const;
  const Grid2& grid() const { return spectrum_.grid(); }

 private:
  Spectrum spectrum_;
  Band band_;
};

VectorField2 gradient(const ScalarField& f);
SymMatField2 hessian(const ScalarField& f);

SymMatField2 sym_grad(const VectorField2& p);
SymMatField2 sym_grad(const AffineVectorField& w);
/// (∇v)ᵀ∇v: entries Σ_k ∂_i v^k ∂_j v^k.
SymMatField2 metric_pullback(const VectorField2& v);
/// p⊗p.
SymMatField2 outer(const VectorField2& p);
/// ∂₂₂A₁₁ − 2∂₁₂A₁₂ + ∂₁₁A₂₂.
ScalarField curl_curl(const SymMatField2& A);
/// A − ½(∇v)ᵀ∇v − sym∇w.
SymMatField2 defect(const VectorField2& v, const AffineVectorField& w, const SymMatField2& A);

/// Zero-mean φ with Δφ = −f; f must have zero mean.
ScalarField poisson_solve(const ScalarField& f);
/// ∫_{T²} f by the trapezoidal rule.
double integrate(const ScalarField& f);

}  // namespace macorr
