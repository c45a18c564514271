#pragma once

#include <array>
#include <json.hpp>
#include <vector>

#include "macorr/fields.hpp"

namespace macorr {

struct QuadParams {
  double gamma = 0.1;
  int N = 2;
  int mu_prev = 1;
  int lambda_j = 1;
  int mu_j = 1;
  int lambda_next = 1;
  int mu_next = 1;
  double c_tilde = 1.0;
  double balance = 1.0;
  /// Enforce (B/C̃)^{1/2} ≤ min{μ_j/λ_j, μ_{j+1}/λ_{j+1}}.
  bool check_balance = true;
  /// Evaluate the identity after the first corrugation.
  bool check_first_corrugation = false;

  void validate() const;
  /// C̃^{1/2}μ_j^{γ/2}.
  double amplitude_scale() const;
};

struct DefectReport {
  double defect = 0.0;
  double F = 0.0;
  double G = 0.0;
  double H = 0.0;
  double I = 0.0;
  double previous_defect = 0.0;
  double dv_sup = 0.0;
  double dv_c1 = 0.0;
  double dw_sup = 0.0;
  double dw_c1 = 0.0;
  /// Normalized ∂11v¹, ∂12v¹, ∂22v¹, ∂11v², ∂12v², ∂22v².
  std::array<double, 6> anisotropy{};
  double reconstruction = 0.0;
  /// Negative when not evaluated.
  double first_corrugation = -1.0;
  double cbar = 0.0;
  double a2_min = 0.0;
  double a2_max = 0.0;
  double b2_min = 0.0;
  double b2_max = 0.0;
  std::vector<double> kallen_increments;
};

void to_json(nlohmann::json& j, const DefectReport& r);

struct QuadResult {
  VectorField2 v;
  AffineVectorField w;
  SymMatField2 defect;
  DefectReport report;
};

QuadResult quad_step(const VectorField2& v, const AffineVectorField& w, const SymMatField2& A0, const QuadParams& p);

/// sup|∂_{ab}v^k| divided by C̃^{1/2}μ_j^{γ/2} times the slot scale
/// λ_{j+1}, μ_j, μ_j²/λ_{j+1}, λ_{j+1}²/μ_{j+1}, λ_{j+1}, μ_{j+1}.
std::array<double, 6> anisotropy_report(const VectorField2& v, const QuadParams& p);

}  // namespace macorr
