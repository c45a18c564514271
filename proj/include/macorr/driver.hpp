#pragma once

#include <filesystem>
#include <functional>
#include <json.hpp>
#include <string>
#include <vector>

#include "macorr/fields.hpp"
#include "macorr/stage.hpp"

namespace macorr {

struct Subsolution {
  SymMatField2 A;
  VectorField2 v;
  AffineVectorField w;
  /// Δφ = −f.
  ScalarField phi;
};

/// A = (φ + c)Id with Δφ = −f and c = margin + 2 sup|φ|, v = w = 0.
Subsolution build_subsolution(const ScalarField& f, double margin);

/// Geometric mollification scales l_q = l_0 θ^q with minimal admissible λ_q.
struct Schedule {
  double l0 = 1.0;
  double theta = 0.5;
  double sigma0 = 1.6;
  double gamma = 0.1;
  int q_max = 3;
  double target_defect = 0.0;

  void validate() const;
  double l(int q) const;
  /// Smallest integer λ with λ^{1−γ}l_q ≥ σ₀ and λl_q > 1.
  int lambda(int q) const;
};

/// min{(s+β)/2, S/(S+2J)} with S = KN and J = K+N.
double alpha_star(int K, int N, int s, double beta);
/// (K+N)/(KN).
double r_theory(int K, int N);

struct HolderRow {
  double alpha = 0.0;
  std::vector<double> seminorms;
  bool bounded = true;
};

void to_json(nlohmann::json& j, const HolderRow& r);

/// Hölder seminorm of ∇v_q per iterate and exponent; bounded when the last
/// ratio between consecutive iterates is at most 1.05.
std::vector<HolderRow> holder_diagnostics(const std::vector<VectorField2>& iterates,
                                          const std::vector<double>& alphas);

/// |∫(−½(∇v)ᵀ∇v) : cc(ψ) − ∫fψ| for each test ψ, where
/// M : cc(ψ) = M11∂22ψ − 2M12∂12ψ + M22∂11ψ.
std::vector<double> weak_residual(const VectorField2& v, const ScalarField& f, const std::vector<ScalarField>& tests);

/// ∫|cc(ψ)| with the Frobenius norm of [[∂22ψ, −∂12ψ], [−∂12ψ, ∂11ψ]].
double curl_curl_l1(const ScalarField& psi);

struct ExponentReport {
  int K = 0;
  int N = 0;
  int s = 0;
  double beta = 1.0;
  std::vector<double> l;
  std::vector<int> lambda;
  /// Index 0 is the subsolution, index q+1 the output of stage q.
  std::vector<double> defect;
  std::vector<double> hessian_v;
  std::vector<HolderRow> holder;
  double r_fit = 0.0;
  double r_theory = 0.0;
  double alpha_star = 0.0;
  double subsolution_min_eigenvalue = 0.0;
  double compatibility = 0.0;
  double telescoping = 0.0;
  bool converging = true;
  std::string note;
  std::vector<StageReport> stages;
};

void to_json(nlohmann::json& j, const ExponentReport& r);

struct NashKuiperResult {
  VectorField2 v;
  AffineVectorField w;
  SymMatField2 A;
  SymMatField2 defect;
  std::vector<VectorField2> iterates;
  ExponentReport report;
};

/// Called after every stage with the stage index, the new fields and their defect.
using StageObserver =
    std::function<void(int q, const VectorField2& v, const AffineVectorField& w, const SymMatField2& defect)>;

/// Iterates run_stage along the schedule, starting from build_subsolution(f, margin).
/// The template supplies K, N, s, β, C and the first-corrugation check flag.
NashKuiperResult nash_kuiper(const ScalarField& f, const StageParams& tmpl, const Schedule& s, double margin,
                             const std::vector<double>& alphas, const StageObserver& observer = {});

}  // namespace macorr
