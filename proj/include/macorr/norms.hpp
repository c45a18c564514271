#pragma once

#include <vector>

#include "macorr/fields.hpp"

namespace macorr {

double sup_norm(const ScalarField& f);
/// Pointwise Euclidean norm.
double sup_norm(const VectorField2& f);
/// Pointwise Frobenius norm.
double sup_norm(const SymMatField2& f);
/// Over the grid nodes of the fundamental cell.
double sup_norm(const AffineVectorField& f);

/// max over t+s ≤ m of sup|∂₁^t∂₂^s f|, m ≤ 4.
double cm_norm(const ScalarField& f, int m);
double cm_norm(const VectorField2& f, int m);
double cm_norm(const SymMatField2& f, int m);

/// max(sup|f|, sup|∇f|) with the Frobenius norm on the Jacobian.
double c1_norm(const VectorField2& f);
double c1_norm(const AffineVectorField& f);

/// sup over x of (Σ_{i,j,k} |∂_i∂_j f^k|²)^{1/2}.
double hessian_sup(const VectorField2& f);
double hessian_sup(const AffineVectorField& f);

/// max(c1_norm, hessian_sup).
double c2_norm(const VectorField2& f);
double c2_norm(const AffineVectorField& f);

/// ∫|f| over the torus.
double l1_norm(const ScalarField& f);
double l1_norm(const SymMatField2& f);

/// Dyadic-pair estimate of the α-Hölder seminorm of the vector of components.
/// Pairs are separated by h·2^q along e1, e2, e1+e2, e1−e2 for q < levels (all if levels < 0).
double holder_seminorm(const std::vector<const ScalarField*>& components, double alpha, int levels = -1);
double holder_seminorm(const ScalarField& f, double alpha, int levels = -1);

}  // namespace macorr
