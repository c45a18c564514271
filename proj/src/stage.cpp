#include "macorr/stage.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <string>

#include "macorr/calculus.hpp"
#include "macorr/field_io.hpp"
#include "macorr/mollify.hpp"
#include "macorr/norms.hpp"

namespace macorr {

void StageParams::validate() const {
  if (K < 1 || N < 1) throw ParameterError("K and N must be at least 1");
  if (!(gamma > 0.0 && gamma < 1.0)) throw ParameterError("gamma must lie in (0,1)");
  if (!(l > 0.0 && l < std::numbers::pi)) throw ParameterError("mollification scale must lie in (0, pi)");
  if (!(sigma() > 1.0)) throw ParameterError("sigma = lambda*l must exceed 1, got " + std::to_string(sigma()));
  if (std::pow(lambda, 1.0 - gamma) * l < sigma0)
    throw ParameterError("lambda^(1-gamma)*l = " + std::to_string(std::pow(lambda, 1.0 - gamma) * l) +
                         " is below sigma0 = " + std::to_string(sigma0));
  if (majorant < 1.0) throw ParameterError("majorant must be at least 1");
  if ((s != 0 && s != 1) || !(beta > 0.0 && beta <= 1.0) || s + beta >= 2.0)
    throw ParameterError("regularity class needs s in {0,1}, beta in (0,1], s+beta < 2");
  if (!(c_initial > 0.0) || max_calibration_rounds < 1) throw ParameterError("invalid calibration settings");
}

QuadParams FrequencyLadder::quad(int j, const StageParams& p) const {
  const auto u = static_cast<std::size_t>(j);
  QuadParams q;
  q.gamma = p.gamma;
  q.N = p.N;
  q.mu_prev = j == 0 ? mu[0] : mu[u - 1];
  q.lambda_j = lambda[u];
  q.mu_j = mu[u];
  q.lambda_next = lambda[u + 1];
  q.mu_next = mu[u + 1];
  q.check_first_corrugation = p.check_first_corrugation;
  return q;
}

void to_json(nlohmann::json& j, const FrequencyLadder& f) {
  j = nlohmann::json{{"mu", f.mu}, {"lambda", f.lambda}, {"rounding", f.rounding}};
}

FrequencyLadder ladder(const StageParams& p) {
  if (p.N < 1) throw ParameterError("N must be at least 1");
  if (p.K < 1) throw ParameterError("K must be at least 1");
  const double sigma = p.sigma();
  if (!(sigma > 1.0)) throw ParameterError("sigma must exceed 1 for the frequencies to grow");
  if (!(p.l > 0.0)) throw ParameterError("mollification scale must be positive");
  FrequencyLadder f;
  auto round_up = [&f](double x) {
    const double r = std::ceil(x - 1e-9);
    if (r > 2147483647.0) throw ParameterError("frequency overflow");
    f.rounding = std::max(f.rounding, std::abs(r - x));
    return static_cast<int>(r);
  };
  const double half = 0.5 * p.N;
  f.mu.push_back(round_up(1.0 / p.l));
  f.lambda.push_back(f.mu.front());
  for (int j = 1; j <= p.K; ++j) {
    f.mu.push_back(round_up(std::pow(sigma, j + (j + 1) * half) / p.l));
    f.lambda.push_back(round_up(std::pow(sigma, j * (1.0 + half)) / p.l));
  }
  for (int j = 1; j <= p.K; ++j) {
    const auto u = static_cast<std::size_t>(j);
    if (!(f.mu[u - 1] <= f.lambda[u] && f.lambda[u] <= f.mu[u]))
      throw ParameterError("frequency ladder loses its interleaving at j = " + std::to_string(j));
  }
  return f;
}

void to_json(nlohmann::json& j, const StageReport& r) {
  j = nlohmann::json{{"defect_input", r.defect_input},
                     {"defect_mollified", r.defect_mollified},
                     {"defect_final", r.defect_final},
                     {"defect_last_step", r.defect_last_step},
                     {"mollification_error", r.mollification_error},
                     {"dv_c1", r.dv_c1},
                     {"dw_c1", r.dw_c1},
                     {"dv_sup", r.dv_sup},
                     {"hessian_v", r.hessian_v},
                     {"hessian_w", r.hessian_w},
                     {"c_constant", r.c_constant},
                     {"calibration_rounds", r.calibration_rounds},
                     {"c_tilde", r.c_tilde},
                     {"steps", r.steps},
                     {"ladder", r.ladder},
                     {"reconstruction", r.reconstruction},
                     {"max_step_reconstruction", r.max_step_reconstruction},
                     {"wall_seconds", r.wall_seconds}};
}

double majorant(const VectorField2& v, const AffineVectorField& w) {
  const double m = std::sqrt(w.M.m11 * w.M.m11 + w.M.m12 * w.M.m12 + w.M.m21 * w.M.m21 + w.M.m22 * w.M.m22);
  return std::max({c2_norm(v), c2_norm(w.periodic) + m, 1.0});
}

namespace {

void dump(const std::filesystem::path& dir, int j, const VectorField2& v, const AffineVectorField& w,
          const SymMatField2& D) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  const std::string tag = std::to_string(j);
  write_field(dir / ("v_" + tag + ".fld"), v);
  write_field(dir / ("w_" + tag + ".fld"), w);
  write_field(dir / ("D_" + tag + ".fld"), D);
}

}  // namespace

StageResult run_stage(const VectorField2& v, const AffineVectorField& w, const SymMatField2& A, const StageParams& p) {
  const auto start = std::chrono::steady_clock::now();
  p.validate();
  require_same_grid(v.grid(), A.grid());
  const Grid2& g = A.grid();
  StageReport rep;
  rep.ladder = ladder(p);
  if (rep.ladder.mu.back() > g.max_active_freq())
    throw ResolutionError("frequency ladder reaches " + std::to_string(rep.ladder.mu.back()) +
                          " beyond the active budget " + std::to_string(g.max_active_freq()) +
                          " at n = " + std::to_string(g.n()));

  rep.defect_input = sup_norm(defect(v, w, A));
  const Mollifier phi(g, p.l);
  const VectorField2 v0 = phi(v);
  const AffineVectorField w0 = phi(w);
  const SymMatField2 A0 = phi(A);
  rep.mollification_error = sup_norm(A0 - A);
  const SymMatField2 D0 = defect(v0, w0, A0);
  rep.defect_mollified = sup_norm(D0);
  dump(p.dump_dir, 0, v0, w0, D0);
  const double base = rep.defect_mollified + std::pow(p.l * p.majorant, 2);

  double C = p.c_initial;
  for (int round = 1;; ++round, C *= 2.0) {
    rep.calibration_rounds = round;
    rep.c_constant = C;
    rep.steps.clear();
    rep.c_tilde.clear();
    try {
      VectorField2 vj = v0;
      AffineVectorField wj = w0;
      SymMatField2 Dj = D0;
      double ct = C * base;
      double balance = ct;
      for (int j = 0; j < p.K; ++j) {
        QuadParams q = rep.ladder.quad(j, p);
        q.c_tilde = ct;
        q.balance = balance;
        // Rounded frequencies may break the balance condition by the rounding slack.
        if (rep.ladder.rounding > 0.0) q.check_balance = false;
        rep.c_tilde.push_back(ct);
        std::optional<QuadResult> r;
        try {
          r.emplace(quad_step(vj, wj, A0, q));
        } catch (const CalibrationError&) {
          throw;
        } catch (const Error& e) {
          throw Error("step " + std::to_string(j) + ": " + e.what());
        }
        vj = std::move(r->v);
        wj = std::move(r->w);
        Dj = std::move(r->defect);
        rep.max_step_reconstruction = std::max(rep.max_step_reconstruction, r->report.reconstruction);
        rep.steps.push_back(std::move(r->report));
        dump(p.dump_dir, j + 1, vj, wj, Dj);
        const double ratio = double(q.mu_next) / q.lambda_next;
        balance = ct;
        ct /= ratio * ratio;
      }
      const SymMatField2 Dt = defect(vj, wj, A);
      rep.defect_final = sup_norm(Dt);
      rep.defect_last_step = sup_norm(Dj);
      rep.reconstruction = sup_norm(Dt - (A - A0) - Dj) / (rep.defect_mollified + sup_norm(A));
      rep.dv_c1 = c1_norm(vj - v);
      rep.dv_sup = sup_norm(vj - v);
      rep.dw_c1 = c1_norm(wj - w);
      rep.hessian_v = hessian_sup(vj);
      rep.hessian_w = hessian_sup(wj);
      rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return {std::move(vj), std::move(wj), std::move(rep)};
    } catch (const CalibrationError& e) {
      if (round >= p.max_calibration_rounds)
        throw CalibrationError(std::string(e.what()) + " (after " + std::to_string(round) + " calibration rounds)",
                               e.round(), e.min_value());
    }
  }
}

}  // namespace macorr
