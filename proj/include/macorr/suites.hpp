#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

#include "macorr/fit.hpp"
#include "macorr/stage.hpp"

namespace macorr {

/// Outcome of one verification suite. `status` is "pass", "fail" or "error";
/// errors carry the exception kind ("resolution", "parameter", "calibration", "fit", "other").
struct SuiteResult {
  std::string name;
  std::string status = "pass";
  double residual = 0.0;
  double tolerance = 0.0;
  int cases = 0;
  std::string error_kind;
  std::string message;
  nlohmann::json detail = nlohmann::json::object();

  bool passed() const { return status == "pass"; }
};

void to_json(nlohmann::json& j, const SuiteResult& r);

/// Step identity on `inputs` random (v, w, a) with λ cycling through `lambdas` and (i, k) through all four pairs.
SuiteResult suite_corrugation(int n, std::uint64_t seed, int inputs, const std::vector<int>& lambdas);

/// IBP identity at frequency λ: every input runs k = 0..4 for one (profile, axis) pair, pairs cycling over
/// Γ, Γ̄, Γ̃−1 and both axes.
SuiteResult suite_ibp(int n, std::uint64_t seed, int inputs, int lambda);

/// Decomposition residual on random inputs, the exact identity case and linearity.
SuiteResult suite_decompose(int n, std::uint64_t seed, int inputs);

/// 𝔠²(sym∇w) = 0 on random w and the commutator slope over l ∈ {0.2, 0.1, 0.05}.
SuiteResult suite_annihilation(int n, std::uint64_t seed, int inputs);

/// Källén defining identity, telescoping, halving increments and pinching.
SuiteResult suite_kallen(int n, std::uint64_t seed, int inputs);

/// Quadruple-step reconstruction and first-corrugation identity on random inputs.
SuiteResult suite_quadstep(int n, std::uint64_t seed, int inputs);

/// Stage reconstruction on the subsolution of f = 2 sin x₁ sin x₂.
SuiteResult suite_stage(int n, const StageParams& p);

/// Subsolution validity, compatibility, weak-residual domination and exponent arithmetic.
SuiteResult suite_driver(int n, std::uint64_t seed, int inputs);

/// α* against KN/(KN + 2(K+N)) and (s+β)/2 for every listed combination; exact equality required.
SuiteResult suite_exponents(const std::vector<int>& Ks, const std::vector<int>& Ns, const std::vector<int>& ss,
                            const std::vector<double>& betas);

struct VerifyOptions {
  int n = 512;
  std::uint64_t seed = 1;
  int inputs = 20;
  /// Corrugation frequencies; the IBP suite uses the largest.
  std::vector<int> lambdas{4, 8, 16};
  StageParams stage;
};

std::vector<SuiteResult> run_verify_suites(const VerifyOptions& o);

/// One log-log sweep: measured values y against the sweep variable x, fitted slope and its target.
struct RateSweep {
  std::string name;
  std::string variable;
  std::string quantity;
  std::vector<double> x;
  std::vector<double> y;
  LogLogFit fit;
  double expected = 0.0;
  /// Relative tolerance on the slope.
  double tolerance = 0.0;
  /// "two-sided": |slope − expected| ≤ tol·|expected|; "at-least": slope ≤ expected·(1 − tol).
  std::string rule = "two-sided";
  std::string status = "pass";
  std::string message;
  nlohmann::json detail = nlohmann::json::object();

  bool passed() const { return status == "pass"; }
};

void to_json(nlohmann::json& j, const RateSweep& r);

/// sup‖𝓕‖ against λ̄/μ at fixed μ for N Källén rounds; target slope −N with tolerance 20%,
/// plus the pinching C̄μ^γ/2 ≤ a² ≤ 3C̄μ^γ/2 at every sample.
RateSweep rate_kallen(int n, std::uint64_t seed, int N, int mu, const std::vector<int>& ratios);

/// sup‖𝓓_{j+1}‖ against R = λ_{j+1}/μ_j with μ_{j+1}/λ_{j+1} = R^{N/2} on fixed inputs.
/// Target rate min{N log R, 2 log(μ_{j+1}/λ_{j+1})} read as a decay of at least 80% of it.
/// Ratios whose ladder exceeds the grid budget are skipped and listed.
RateSweep rate_quadstep(int n, std::uint64_t seed, int N, const std::vector<int>& ratios);

/// sup|(fg)∗φ_l − (f∗φ_l)(g∗φ_l)| against l; target slope 2 within 15%.
RateSweep rate_commutator(int n, std::uint64_t seed, const std::vector<double>& scales);

/// Stage exponents in σ for each K on identical inputs:
/// decay e_K = −log(‖𝓓_K‖/‖𝓓₀‖)/log σ, growth g_K = log(‖∇²ṽ‖l/(‖𝓓‖^{1/2} + l𝓜))/log σ.
struct StageScaling {
  std::vector<int> K;
  std::vector<double> decay_exponent;
  std::vector<double> growth_exponent;
  std::vector<double> defect_ratio;
  std::vector<double> growth;
  double decay_gain = 0.0;
  double growth_gain = 0.0;
  double expected_decay_gain = 0.0;
  double expected_growth_gain = 1.0;
  double tolerance = 0.25;
  double max_step_reconstruction = 0.0;
  double max_reconstruction = 0.0;
  std::string status = "pass";
  std::string message;
  std::vector<StageReport> reports;

  bool passed() const { return status == "pass"; }
};

void to_json(nlohmann::json& j, const StageScaling& s);

/// Runs the stage from the subsolution of f = 2 sin x₁ sin x₂ (margin 1) for each K with the other
/// parameters of `p`; gains compare the last K with the first.
StageScaling rate_stage(int n, const StageParams& p, const std::vector<int>& Ks);

}  // namespace macorr
