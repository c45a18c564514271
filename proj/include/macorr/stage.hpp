#pragma once

#include <filesystem>
#include <json.hpp>
#include <vector>

#include "macorr/fields.hpp"
#include "macorr/quadstep.hpp"

namespace macorr {

struct StageParams {
  int K = 2;
  int N = 2;
  double gamma = 0.1;
  double l = 1.0;
  double lambda = 2.0;
  /// 𝓜 ≥ max{‖v‖₂, ‖w‖₂, 1}.
  double majorant = 1.0;
  int s = 0;
  double beta = 1.0;
  double sigma0 = 1.0;
  /// Multiplier C in C̃₀ = C(‖𝓓₀‖ + (l𝓜)²); doubled after a positivity failure.
  double c_initial = 2.0;
  int max_calibration_rounds = 8;
  bool check_first_corrugation = false;
  /// When non-empty, every intermediate (v_j, w_j, 𝓓_j) is written here as .fld.
  std::filesystem::path dump_dir;

  double sigma() const { return lambda * l; }
  void validate() const;
};

/// μ_0..μ_K and λ_0..λ_K with λ_0 = μ_0.
struct FrequencyLadder {
  std::vector<int> mu;
  std::vector<int> lambda;
  /// Largest gap between a rounded frequency and its real value.
  double rounding = 0.0;

  QuadParams quad(int j, const StageParams& p) const;
};

void to_json(nlohmann::json& j, const FrequencyLadder& f);

/// μ_0 = ⌈1/l⌉, μ_j = ⌈σ^{j+(j+1)N/2}/l⌉, λ_j = ⌈σ^{j(1+N/2)}/l⌉.
FrequencyLadder ladder(const StageParams& p);

struct StageReport {
  double defect_input = 0.0;
  double defect_mollified = 0.0;
  double defect_final = 0.0;
  double defect_last_step = 0.0;
  double mollification_error = 0.0;
  double dv_c1 = 0.0;
  double dw_c1 = 0.0;
  double dv_sup = 0.0;
  double hessian_v = 0.0;
  double hessian_w = 0.0;
  double c_constant = 0.0;
  int calibration_rounds = 0;
  std::vector<double> c_tilde;
  std::vector<DefectReport> steps;
  FrequencyLadder ladder;
  /// sup|defect(ṽ,w̃,A) − (A − A₀) − 𝓓_K| relative to ‖𝓓₀‖ + ‖A‖.
  double reconstruction = 0.0;
  double max_step_reconstruction = 0.0;
  double wall_seconds = 0.0;
};

void to_json(nlohmann::json& j, const StageReport& r);

struct StageResult {
  VectorField2 v;
  AffineVectorField w;
  StageReport report;
};

StageResult run_stage(const VectorField2& v, const AffineVectorField& w, const SymMatField2& A, const StageParams& p);

/// max{‖v‖₂, ‖w‖₂, 1}, with the affine part of w entering through |M| only.
double majorant(const VectorField2& v, const AffineVectorField& w);

}  // namespace macorr
