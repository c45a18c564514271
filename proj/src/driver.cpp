#include "macorr/driver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "macorr/calculus.hpp"
#include "macorr/norms.hpp"
#include "macorr/spectral.hpp"

namespace macorr {

Subsolution build_subsolution(const ScalarField& f, double margin) {
  if (!(margin > 0.0)) throw ParameterError("margin must be positive");
  ScalarField phi = poisson_solve(f);
  const double c = margin + 2.0 * sup_norm(phi);
  const Grid2& g = f.grid();
  SymMatField2 A = SymMatField2::scaled_identity(phi + c);
  return {std::move(A), VectorField2(g), AffineVectorField::from_periodic(VectorField2(g)), std::move(phi)};
}

void Schedule::validate() const {
  if (!(l0 > 0.0 && l0 < std::numbers::pi)) throw ParameterError("initial scale must lie in (0, pi)");
  if (!(theta > 0.0 && theta < 1.0)) throw ParameterError("theta must lie in (0,1)");
  if (!(sigma0 >= 1.0)) throw ParameterError("sigma0 must be at least 1");
  if (!(gamma > 0.0 && gamma < 1.0)) throw ParameterError("gamma must lie in (0,1)");
  if (q_max < 1) throw ParameterError("at least one stage is required");
  if (target_defect < 0.0) throw ParameterError("target defect must be non-negative");
}

double Schedule::l(int q) const { return l0 * std::pow(theta, q); }

int Schedule::lambda(int q) const {
  const double lq = l(q);
  double lam = std::max(std::pow(sigma0 / lq, 1.0 / (1.0 - gamma)), 1.0 / lq);
  int out = static_cast<int>(std::ceil(lam - 1e-9));
  while (std::pow(out, 1.0 - gamma) * lq < sigma0 || out * lq <= 1.0) ++out;
  while (out > 1 && std::pow(out - 1, 1.0 - gamma) * lq >= sigma0 && (out - 1) * lq > 1.0) --out;
  return out;
}

double alpha_star(int K, int N, int s, double beta) {
  const double S = double(K) * N;
  const double J = double(K) + N;
  return std::min((s + beta) / 2.0, S / (S + 2.0 * J));
}

double r_theory(int K, int N) { return (double(K) + N) / (double(K) * N); }

void to_json(nlohmann::json& j, const HolderRow& r) {
  j = nlohmann::json{{"alpha", r.alpha}, {"seminorms", r.seminorms}, {"bounded", r.bounded}};
}

std::vector<HolderRow> holder_diagnostics(const std::vector<VectorField2>& iterates,
                                          const std::vector<double>& alphas) {
  std::vector<HolderRow> rows;
  for (double alpha : alphas) rows.push_back({alpha, {}, true});
  for (const VectorField2& v : iterates) {
    const VectorField2 g1 = gradient(v.c1);
    const VectorField2 g2 = gradient(v.c2);
    const std::vector<const ScalarField*> comps = {&g1.c1, &g1.c2, &g2.c1, &g2.c2};
    for (HolderRow& r : rows) r.seminorms.push_back(holder_seminorm(comps, r.alpha));
  }
  for (HolderRow& r : rows) {
    const std::size_t m = r.seminorms.size();
    if (m >= 2) r.bounded = r.seminorms[m - 1] <= 1.05 * r.seminorms[m - 2];
  }
  return rows;
}

namespace {

double pair_cc(const SymMatField2& M, const DerivativeCache& d) {
  return integrate(M.e11 * d(0, 2) - 2.0 * (M.e12 * d(1, 1)) + M.e22 * d(2, 0));
}

double slope(const std::vector<double>& y) {
  const std::size_t m = y.size();
  if (m < 2) return std::numeric_limits<double>::quiet_NaN();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double x = double(i);
    const double v = std::log(y[i]);
    sx += x;
    sy += v;
    sxx += x * x;
    sxy += x * v;
  }
  return (double(m) * sxy - sx * sy) / (double(m) * sxx - sx * sx);
}

double min_eigenvalue(const SymMatField2& D) {
  double m = std::numeric_limits<double>::infinity();
  const auto& a = D.e11.values();
  const auto& b = D.e12.values();
  const auto& c = D.e22.values();
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double h = 0.5 * (a[k] - c[k]);
    m = std::min(m, 0.5 * (a[k] + c[k]) - std::sqrt(h * h + b[k] * b[k]));
  }
  return m;
}

[[noreturn]] void rethrow_at(int q, const Error& e) {
  const std::string msg = "stage " + std::to_string(q) + ": " + e.what();
  if (const auto* c = dynamic_cast<const CalibrationError*>(&e)) throw CalibrationError(msg, c->round(), c->min_value());
  if (dynamic_cast<const ResolutionError*>(&e) != nullptr) throw ResolutionError(msg);
  if (dynamic_cast<const ParameterError*>(&e) != nullptr) throw ParameterError(msg);
  throw Error(msg);
}

}  // namespace

double curl_curl_l1(const ScalarField& psi) {
  const DerivativeCache d(psi);
  const ScalarField a = d(0, 2);
  const ScalarField b = d(1, 1);
  const ScalarField c = d(2, 0);
  return l1_norm(SymMatField2(a, -1.0 * b, c));
}

std::vector<double> weak_residual(const VectorField2& v, const ScalarField& f, const std::vector<ScalarField>& tests) {
  const SymMatField2 M = -0.5 * metric_pullback(v);
  std::vector<double> out;
  out.reserve(tests.size());
  for (const ScalarField& psi : tests) {
    const DerivativeCache d(psi);
    out.push_back(std::abs(pair_cc(M, d) - integrate(f * psi)));
  }
  return out;
}

void to_json(nlohmann::json& j, const ExponentReport& r) {
  j = nlohmann::json{{"K", r.K},
                     {"N", r.N},
                     {"s", r.s},
                     {"beta", r.beta},
                     {"l", r.l},
                     {"lambda", r.lambda},
                     {"defect", r.defect},
                     {"hessian_v", r.hessian_v},
                     {"holder", r.holder},
                     {"r_fit", r.r_fit},
                     {"r_theory", r.r_theory},
                     {"alpha_star", r.alpha_star},
                     {"subsolution_min_eigenvalue", r.subsolution_min_eigenvalue},
                     {"compatibility", r.compatibility},
                     {"telescoping", r.telescoping},
                     {"converging", r.converging},
                     {"note", r.note},
                     {"stages", r.stages}};
}

NashKuiperResult nash_kuiper(const ScalarField& f, const StageParams& tmpl, const Schedule& s, double margin,
                             const std::vector<double>& alphas, const StageObserver& observer) {
  s.validate();
  Subsolution sub = build_subsolution(f, margin);
  ExponentReport rep;
  rep.K = tmpl.K;
  rep.N = tmpl.N;
  rep.s = tmpl.s;
  rep.beta = tmpl.beta;
  rep.r_theory = r_theory(tmpl.K, tmpl.N);
  rep.alpha_star = alpha_star(tmpl.K, tmpl.N, tmpl.s, tmpl.beta);
  rep.compatibility = sup_norm(curl_curl(sub.A) + f) / std::max(sup_norm(f), 1.0);

  VectorField2 v = sub.v;
  AffineVectorField w = sub.w;
  SymMatField2 D = defect(v, w, sub.A);
  rep.subsolution_min_eigenvalue = min_eigenvalue(D);
  rep.defect.push_back(sup_norm(D));
  rep.hessian_v.push_back(hessian_sup(v));
  std::vector<VectorField2> iterates;

  for (int q = 0; q < s.q_max; ++q) {
    StageParams p = tmpl;
    p.gamma = s.gamma;
    p.sigma0 = s.sigma0;
    p.l = s.l(q);
    p.lambda = s.lambda(q);
    p.majorant = majorant(v, w);
    if (!tmpl.dump_dir.empty()) p.dump_dir = tmpl.dump_dir / ("stage_" + std::to_string(q));
    rep.l.push_back(p.l);
    rep.lambda.push_back(int(p.lambda));
    std::optional<StageResult> r;
    try {
      r.emplace(run_stage(v, w, sub.A, p));
    } catch (const Error& e) {
      rethrow_at(q, e);
    }
    v = std::move(r->v);
    w = std::move(r->w);
    D = defect(v, w, sub.A);
    if (observer) observer(q, v, w, D);
    const double dq = sup_norm(D);
    rep.telescoping =
        std::max(rep.telescoping, std::abs(dq - r->report.defect_final) / std::max(rep.defect.front(), 1e-300));
    rep.defect.push_back(dq);
    rep.hessian_v.push_back(r->report.hessian_v);
    rep.stages.push_back(std::move(r->report));
    iterates.push_back(v);
    const std::size_t m = rep.defect.size();
    if (m >= 3 && rep.defect[m - 1] >= 0.9 * rep.defect[m - 2]) {
      rep.converging = false;
      rep.note = "defect ratio " + std::to_string(rep.defect[m - 1] / rep.defect[m - 2]) + " after stage " +
                 std::to_string(q);
    }
    if (dq <= s.target_defect) break;
  }

  const std::vector<double> d(rep.defect.begin() + 1, rep.defect.end());
  const std::vector<double> h(rep.hessian_v.begin() + 1, rep.hessian_v.end());
  const double sd = slope(d);
  rep.r_fit = slope(h) / -sd;
  rep.holder = holder_diagnostics(iterates, alphas);
  return {std::move(v), std::move(w), std::move(sub.A), std::move(D), std::move(iterates), std::move(rep)};
}

}  // namespace macorr
