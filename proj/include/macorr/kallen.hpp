#pragma once

#include <vector>

#include "macorr/fields.hpp"

namespace macorr {

struct KallenParams {
  double mu = 1.0;
  double lambda_bar = 1.0;
  double gamma = 0.1;
  int N = 1;
  double cbar = 1.0;
  double positivity_floor = 0.0;

  void validate() const;
  /// C̄μ^γ.
  double level() const;
};

struct KallenResult {
  ScalarField a;
  AffineVectorField psi;
  SymMatField2 F;
  /// sup|𝓔_i − 𝓔_{i−1}| for i = 1..N.
  std::vector<double> increments;
  /// sup|a_i²Id + sym∇Ψ_i + 𝓔_{i−1} − H| relative to sup|a_i²|, i = 1..N.
  std::vector<double> telescoping;
  double a2_min = 0.0;
  double a2_max = 0.0;
};

/// a₀ = 0; for i = 1..N: (Ψ̄, ā) = decompose(H − 𝓔_{i−1}), a_i² = C̄μ^γ + ā,
/// Ψ_i = −Ψ̄ − C̄μ^γ·x, so that a_i²Id + sym∇Ψ_i = H − 𝓔_{i−1} with 𝓔_i = ∇a_i⊗∇a_i/λ̄².
/// Returns a = a_N, Ψ = Ψ_N and 𝓕 = 𝓔_N − 𝓔_{N−1}.
KallenResult kallen_iterate(const SymMatField2& H, const KallenParams& p);

/// max(4·sup|ā(H)|/μ^γ, 1).
double calibrate_cbar(const SymMatField2& H, double mu, double gamma);

/// sup|a²Id + sym∇Ψ − H + ∇a⊗∇a/λ̄² − 𝓕| relative to sup a².
double kallen_identity_residual(const SymMatField2& H, const KallenResult& r, double lambda_bar);

}  // namespace macorr
