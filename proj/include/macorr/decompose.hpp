#pragma once

#include "macorr/fields.hpp"

namespace macorr {

struct Decomposition {
  AffineVectorField psi;
  ScalarField a;
};

/// Exact Fourier solve of H + sym∇Ψ = a·Id. Linear in H; the mean of the
/// trace-free part of H goes to the affine part of Ψ.
Decomposition diagonal_decompose(const SymMatField2& H);

/// sup|H + sym∇Ψ − a·Id| / sup|H| (absolute when H vanishes).
double decomposition_residual(const SymMatField2& H, const Decomposition& d);

}  // namespace macorr
