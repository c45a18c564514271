#pragma once

#include <cstdint>
#include <filesystem>
#include <json.hpp>
#include <string>

#include "macorr/fields.hpp"

namespace macorr {

/// Exit codes of the command surface.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitConfig = 2;

struct RunConfig {
  std::string command;
  /// 0 selects the command default (verify 512, rates 1024, solve 2048).
  int n = 0;
  int K = 2;
  int N = 2;
  double gamma = 0.1;
  double sigma = 2.0;
  double l = 1.0;
  /// When positive, overrides σ through σ = λl.
  double lambda = 0.0;
  double theta = 0.5;
  double sigma0 = 1.6;
  double margin = 1.0;
  double target_defect = 0.0;
  int stages = 3;
  int inputs = 20;
  std::string f = "sines";
  std::filesystem::path out = "macorr_out";
  std::uint64_t seed = 1;

  int grid() const;
  double effective_sigma() const { return lambda > 0.0 ? lambda * l : sigma; }
  void validate() const;
};

/// Every field except the output directory.
void to_json(nlohmann::json& j, const RunConfig& c);

/// Built-in right-hand sides: "sines" = 2 sin x₁ sin x₂, "zero", "mode3" = sin 3x₁,
/// "offset" = 0.25 + 2 sin x₁ sin x₂; anything else is read as a scalar .fld file.
ScalarField load_rhs(const std::string& spec, const Grid2& g);

/// Pointwise Frobenius norm.
ScalarField pointwise_norm(const SymMatField2& D);

/// Each command writes its JSON (sorted keys, two-space indent) and artifacts under config.out,
/// prints a summary to stdout and returns one of the exit codes above.
int cmd_verify(const RunConfig& c);
int cmd_rates(const RunConfig& c);
int cmd_solve(const RunConfig& c);

}  // namespace macorr
