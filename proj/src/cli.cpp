#include "macorr/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "macorr/calculus.hpp"
#include "macorr/driver.hpp"
#include "macorr/field_io.hpp"
#include "macorr/norms.hpp"
#include "macorr/random.hpp"
#include "macorr/spectral.hpp"
#include "macorr/suites.hpp"

namespace macorr {

namespace {

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream os(path);
  if (!os) throw ParameterError("cannot write " + path.string());
  os << j.dump(2) << '\n';
}

void write_csv(const std::filesystem::path& path, const std::string& header,
               const std::vector<std::vector<double>>& columns) {
  std::ofstream os(path);
  if (!os) throw ParameterError("cannot write " + path.string());
  os << header << '\n' << std::setprecision(17);
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c][i];
    os << '\n';
  }
}

StageParams stage_params(const RunConfig& c) {
  StageParams p;
  p.K = c.K;
  p.N = c.N;
  p.gamma = c.gamma;
  p.l = c.l;
  p.lambda = c.effective_sigma() / c.l;
  return p;
}

bool is_config_error(const std::string& kind) { return kind == "resolution" || kind == "parameter"; }

}  // namespace

int RunConfig::grid() const {
  if (n > 0) return n;
  if (command == "solve") return 2048;
  if (command == "rates") return 1024;
  return 512;
}

void RunConfig::validate() const {
  if (n < 0) throw ParameterError("grid size must be positive");
  if (K < 1 || N < 1) throw ParameterError("K and N must be at least 1");
  if (!(gamma > 0.0 && gamma < 1.0)) throw ParameterError("gamma must lie in (0,1)");
  if (!(l > 0.0)) throw ParameterError("l must be positive");
  if (!(effective_sigma() > 1.0)) throw ParameterError("sigma must exceed 1");
  if (!(margin > 0.0)) throw ParameterError("margin must be positive");
  if (stages < 1) throw ParameterError("at least one stage is required");
  if (inputs < 1) throw ParameterError("at least one input is required");
  Grid2 g(grid());
}

void to_json(nlohmann::json& j, const RunConfig& c) {
  j = nlohmann::json{{"command", c.command}, {"n", c.grid()},          {"K", c.K},
                     {"N", c.N},             {"gamma", c.gamma},       {"sigma", c.effective_sigma()},
                     {"l", c.l},             {"theta", c.theta},       {"sigma0", c.sigma0},
                     {"margin", c.margin},   {"target_defect", c.target_defect}, {"stages", c.stages},
                     {"inputs", c.inputs},   {"f", c.f},               {"seed", c.seed}};
}

ScalarField load_rhs(const std::string& spec, const Grid2& g) {
  if (spec == "sines")
    return resolve(ScalarField::sample(g, [](double x, double y) { return 2.0 * std::sin(x) * std::sin(y); }));
  if (spec == "zero") return ScalarField(g);
  if (spec == "mode3") return resolve(ScalarField::sample(g, [](double x, double) { return std::sin(3.0 * x); }));
  if (spec == "offset")
    return resolve(
        ScalarField::sample(g, [](double x, double y) { return 0.25 + 2.0 * std::sin(x) * std::sin(y); }));
  if (!std::filesystem::exists(spec)) throw ParameterError("unknown right-hand side '" + spec + "'");
  ScalarField f = read_scalar(spec);
  if (!(f.grid() == g))
    throw ParameterError("right-hand side grid " + std::to_string(f.n()) + " differs from --n " +
                         std::to_string(g.n()));
  return resolve(f);
}

ScalarField pointwise_norm(const SymMatField2& D) {
  std::vector<double> out(D.e11.values().size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double a = D.e11.values()[k], b = D.e12.values()[k], c = D.e22.values()[k];
    out[k] = std::sqrt(a * a + 2.0 * b * b + c * c);
  }
  return ScalarField(D.grid(), std::move(out));
}

int cmd_verify(const RunConfig& c) {
  nlohmann::json j;
  j["config"] = c;
  try {
    c.validate();
    std::filesystem::create_directories(c.out);
    VerifyOptions o;
    o.n = c.grid();
    o.seed = c.seed;
    o.inputs = c.inputs;
    if (c.lambda > 0.0) o.lambdas = {int(std::lround(c.lambda))};
    o.stage = stage_params(c);
    const std::vector<SuiteResult> suites = run_verify_suites(o);
    j["suites"] = suites;
    int code = kExitPass;
    for (const SuiteResult& s : suites) {
      std::cout << std::left << std::setw(14) << s.name << ' ' << s.status << "  residual " << s.residual;
      if (!s.message.empty()) std::cout << "  (" << s.message << ')';
      std::cout << '\n';
      if (s.passed()) continue;
      const int sc = s.status == "error" && is_config_error(s.error_kind) ? kExitConfig : kExitFail;
      if (code == kExitPass) {
        j["first_failure"] = s.name;
        std::cerr << "suite '" << s.name << "' failed: " << s.message << '\n';
      }
      code = std::max(code, sc);
    }
    j["passed"] = code == kExitPass;
    write_json(c.out / "verify.json", j);
    return code;
  } catch (const Error& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    j["error"] = e.what();
    j["passed"] = false;
    std::error_code ec;
    std::filesystem::create_directories(c.out, ec);
    if (!ec) write_json(c.out / "verify.json", j);
    return kExitConfig;
  }
}

int cmd_rates(const RunConfig& c) {
  try {
    c.validate();
    std::filesystem::create_directories(c.out);
    const int n = c.grid();
    nlohmann::json j;
    j["config"] = c;
    std::vector<RateSweep> sweeps;
    for (int N = 1; N <= 3; ++N) sweeps.push_back(rate_kallen(n, c.seed, N, 4, {4, 8, 16}));
    for (int N = 1; N <= 2; ++N) sweeps.push_back(rate_quadstep(n, c.seed, N, {4, 8, 16}));
    sweeps.push_back(rate_commutator(n, c.seed, {0.2, 0.1, 0.05}));
    int code = kExitPass;
    for (const RateSweep& s : sweeps) {
      write_csv(c.out / (s.name + ".csv"), s.variable + "," + s.quantity, {s.x, s.y});
      std::cout << std::left << std::setw(14) << s.name << ' ' << s.status;
      if (s.fit.points > 0)
        std::cout << "  slope " << s.fit.slope << " [" << s.fit.ci_low << ", " << s.fit.ci_high << "] expected "
                  << s.expected;
      if (!s.message.empty()) std::cout << "  (" << s.message << ')';
      std::cout << '\n';
      if (!s.passed()) code = kExitFail;
    }
    j["sweeps"] = sweeps;
    StageParams p = stage_params(c);
    const StageScaling st = rate_stage(n, p, {1, 2});
    std::vector<double> ks(st.K.begin(), st.K.end());
    write_csv(c.out / "stage.csv", "K,decay_exponent,growth_exponent,defect_ratio,growth",
              {ks, st.decay_exponent, st.growth_exponent, st.defect_ratio, st.growth});
    std::cout << std::left << std::setw(14) << "stage" << ' ' << st.status << "  decay gain " << st.decay_gain
              << " (expected " << st.expected_decay_gain << ")  growth gain " << st.growth_gain << " (expected "
              << st.expected_growth_gain << ")";
    if (!st.message.empty()) std::cout << "  (" << st.message << ')';
    std::cout << '\n';
    if (!st.passed()) code = kExitFail;
    nlohmann::json sj = st;
    for (auto& r : sj["reports"]) r.erase("steps");
    j["stage"] = sj;
    j["passed"] = code == kExitPass;
    write_json(c.out / "rates.json", j);
    return code;
  } catch (const Error& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  }
}

int cmd_solve(const RunConfig& c) {
  try {
    c.validate();
    std::filesystem::create_directories(c.out);
    const Grid2 g(c.grid());
    const ScalarField f = load_rhs(c.f, g);
    StageParams p = stage_params(c);
    Schedule s;
    s.l0 = c.l;
    s.theta = c.theta;
    s.sigma0 = c.sigma0;
    s.gamma = c.gamma;
    s.q_max = c.stages;
    s.target_defect = c.target_defect;
    const std::vector<double> alphas = {0.8 * alpha_star(c.K, c.N, p.s, p.beta), 1.0};
    const auto observer = [&](int q, const VectorField2& v, const AffineVectorField&, const SymMatField2& D) {
      const std::string tag = "stage_" + std::to_string(q);
      write_heatmap(c.out / (tag + "_v1.pgm"), v.c1);
      write_heatmap(c.out / (tag + "_v2.pgm"), v.c2);
      write_heatmap(c.out / (tag + "_defect.pgm"), pointwise_norm(D));
      std::cout << "stage " << q << "  sup defect " << sup_norm(D) << '\n';
    };
    NashKuiperResult r = nash_kuiper(f, p, s, c.margin, alphas, observer);
    write_field(c.out / "v.fld", r.v);
    write_field(c.out / "w.fld", r.w);
    write_field(c.out / "defect.fld", r.defect);

    std::mt19937_64 rng(c.seed);
    std::vector<ScalarField> tests;
    for (int k = 0; k < 10; ++k) tests.push_back(random_trig(g, 4, rng));
    const std::vector<double> res = weak_residual(r.v, f, tests);
    const double d = sup_norm(r.defect);
    nlohmann::json weak = nlohmann::json::array();
    double excess = 0.0;
    for (std::size_t k = 0; k < tests.size(); ++k) {
      const double bound = d * curl_curl_l1(tests[k]) * 1.01;
      excess = std::max(excess, res[k] - bound);
      weak.push_back({{"residual", res[k]}, {"bound", bound}});
    }

    nlohmann::json j;
    j["config"] = c;
    nlohmann::json rep = r.report;
    for (auto& st : rep["stages"]) st.erase("steps");
    j["report"] = rep;
    j["weak_residuals"] = weak;
    const double d0 = r.report.defect.front();
    j["defect_reduction"] = d0 / d;
    j["final_sup_v"] = sup_norm(r.v);

    std::string failure;
    if (r.report.compatibility > 1e-10) failure = "compatibility";
    else if (r.report.telescoping > 1e-8) failure = "telescoping";
    else if (excess > 1e-9) failure = "weak residual domination";
    else if (!r.report.converging) failure = "convergence: " + r.report.note;
    else if (c.target_defect > 0.0 && d > c.target_defect) failure = "target defect";
    j["passed"] = failure.empty();
    if (!failure.empty()) j["failure"] = failure;
    write_json(c.out / "report.json", j);
    std::cout << "defect " << d0 << " -> " << d << "  reduction " << d0 / d << '\n';
    for (const HolderRow& h : r.report.holder)
      std::cout << "alpha " << h.alpha << (h.bounded ? " bounded" : " growing") << '\n';
    if (!failure.empty()) {
      std::cerr << "check failed: " << failure << '\n';
      return kExitFail;
    }
    return kExitPass;
  } catch (const CalibrationError& e) {
    std::cerr << "calibration failure: " << e.what() << '\n';
    return kExitFail;
  } catch (const Error& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace macorr
