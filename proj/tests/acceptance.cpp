// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "macorr/calculus.hpp"
#include "macorr/cli.hpp"
#include "macorr/driver.hpp"
#include "macorr/norms.hpp"
#include "macorr/random.hpp"
#include "macorr/spectral.hpp"
#include "macorr/suites.hpp"

using namespace macorr;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

Outcome timed_suite(const std::function<SuiteResult()>& run, double budget) {
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteResult s = run();
  const double t = seconds_since(t0);
  Outcome o;
  o.pass = s.passed() && t <= budget;
  o.detail = s.name + " " + s.status + ", max residual " + fmt(s.residual) + " (tol " + fmt(s.tolerance) + "), " +
             std::to_string(s.cases) + " checks, " + fmt(t) + " s of " + fmt(budget);
  if (!s.message.empty()) o.detail += ", " + s.message;
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

int main() {
  tune_allocator();
  std::vector<Outcome> out(11);
  auto progress = [](int k) { std::cerr << "running criterion " << k << std::endl; };

  progress(1);
  out[1] = timed_suite([] { return suite_corrugation(512, kSeed, 20, {4, 8, 16}); }, 30.0);

  progress(2);
  out[2] = timed_suite([] { return suite_ibp(1024, kSeed + 1, 20, 16); }, 60.0);

  progress(3);
  out[3] = timed_suite([] { return suite_decompose(256, kSeed + 2, 6); }, 10.0);

  progress(4);
  out[4] = timed_suite([] { return suite_annihilation(512, kSeed + 3, 5); }, 30.0);

  progress(5);
  {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string d;
    for (int N = 1; N <= 3; ++N) {
      const RateSweep s = rate_kallen(2048, kSeed + 4, N, 4, {4, 8, 16});
      ok = ok && s.passed();
      d += "N=" + std::to_string(N) + " slope " + fmt(s.fit.slope) + " (target " + fmt(s.expected) + " +-20%) " +
           s.status + "; ";
    }
    const double t = seconds_since(t0);
    ok = ok && t <= 300.0;
    out[5] = {ok, d + fmt(t) + " s of 300"};
  }

  progress(7);
  double worst_reconstruction = 0.0;
  {
    const auto t0 = std::chrono::steady_clock::now();
    StageParams p;
    p.N = 2;
    p.l = 1.0;
    p.lambda = 2.0;
    const StageScaling s = rate_stage(2048, p, {1, 2});
    const double t = seconds_since(t0);
    worst_reconstruction = std::max(worst_reconstruction, s.max_step_reconstruction);
    std::string d = "decay exponents";
    for (double e : s.decay_exponent) d += " " + fmt(e);
    d += ", gain " + fmt(s.decay_gain) + " (target " + fmt(s.expected_decay_gain) + " +-25%); growth exponents";
    for (double e : s.growth_exponent) d += " " + fmt(e);
    d += ", gain " + fmt(s.growth_gain) + " (target " + fmt(s.expected_growth_gain) + " +-25%); " + fmt(t) +
         " s of 900";
    if (!s.message.empty()) d += "; " + s.message;
    out[7] = {s.passed() && t <= 900.0, d};
  }

  progress(8);
  double reported_alpha = -1.0;
  {
    const auto t0 = std::chrono::steady_clock::now();
    std::string d;
    bool ok = false;
    try {
      const Grid2 g(2048);
      const ScalarField f = load_rhs("sines", g);
      StageParams p;
      p.K = 2;
      p.N = 2;
      Schedule s;
      s.q_max = 3;
      const double a_star = alpha_star(2, 2, p.s, p.beta);
      const NashKuiperResult r = nash_kuiper(f, p, s, 1.0, {0.8 * a_star, 1.0});
      reported_alpha = r.report.alpha_star;
      for (const StageReport& st : r.report.stages)
        worst_reconstruction = std::max(worst_reconstruction, st.max_step_reconstruction);
      const double d0 = r.report.defect.front();
      const double d1 = sup_norm(r.defect);
      const double reduction = d0 / d1;
      std::mt19937_64 rng(kSeed + 5);
      std::vector<ScalarField> tests;
      for (int k = 0; k < 10; ++k) tests.push_back(random_trig(g, 4, rng));
      const std::vector<double> res = weak_residual(r.v, f, tests);
      bool dominated = true;
      for (std::size_t k = 0; k < tests.size(); ++k)
        dominated = dominated && res[k] <= d1 * curl_curl_l1(tests[k]) * 1.01;
      const bool low_bounded = r.report.holder.at(0).bounded;
      const bool one_growing = !r.report.holder.at(1).bounded;
      const double t = seconds_since(t0);
      ok = reduction >= 100.0 && dominated && low_bounded && one_growing && t <= 1800.0;
      d = "defect " + fmt(d0) + " -> " + fmt(d1) + " (reduction " + fmt(reduction) + ", need >= 100); weak residuals " +
          (dominated ? "dominated" : "NOT dominated") + "; alpha " + fmt(0.8 * a_star) +
          (low_bounded ? " bounded" : " growing") + ", alpha 1 " + (one_growing ? "growing" : "bounded") + "; " +
          fmt(t) + " s of 1800";
    } catch (const std::exception& e) {
      d = std::string("error: ") + e.what();
    }
    out[8] = {ok, d};
  }

  progress(6);
  {
    bool ok = true;
    std::string d;
    for (int N = 1; N <= 2; ++N) {
      const RateSweep s = rate_quadstep(2048, kSeed + 6, N, {4, 8, 16});
      const double rec = s.detail.value("max_reconstruction", 0.0);
      worst_reconstruction = std::max(worst_reconstruction, rec);
      ok = ok && s.passed();
      d += "N=" + std::to_string(N) + " decay slope " + fmt(s.fit.slope) + " over " + std::to_string(s.fit.points) +
           " ratios (bound rate " + fmt(s.expected) + ", at least 80%) " + s.status + "; ";
    }
    ok = ok && worst_reconstruction <= 1e-8;
    out[6] = {ok, d + "max step reconstruction " + fmt(worst_reconstruction) + " (tol 1e-08)"};
  }

  progress(9);
  {
    const SuiteResult s = suite_exponents({1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}, {0, 1}, {0.25, 0.5, 0.75, 1.0});
    const bool run_ok = reported_alpha == std::min(0.5, 4.0 / 12.0);
    out[9] = {s.passed() && run_ok, std::to_string(s.cases) + " combinations " + s.status + "; end-to-end report alpha* " +
                                        fmt(reported_alpha)};
  }

  progress(10);
  {
    const std::string cli = MACORR_CLI_PATH;
    const std::string base = "acceptance_determinism";
    std::string d;
    bool ok = true;
    for (int k = 0; k < 2; ++k) {
      const std::string cmd = "MACORR_THREADS=1 " + cli + " verify --seed 7 --out " + base + "_" + std::to_string(k) +
                              " > /dev/null";
      const int rc = std::system(cmd.c_str());
      if (rc != 0) {
        ok = false;
        d += "run " + std::to_string(k) + " exit " + std::to_string(rc) + "; ";
      }
    }
    const std::string a = slurp(base + "_0/verify.json");
    const std::string b = slurp(base + "_1/verify.json");
    ok = ok && !a.empty() && a == b;
    out[10] = {ok, d + "verify JSON " + std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different")};
  }

  int failed = 0;
  for (int k = 1; k <= 10; ++k) {
    std::cout << "criterion " << k << ": " << (out[k].pass ? "PASS" : "FAIL") << " | " << out[k].detail << '\n';
    if (!out[k].pass) ++failed;
  }
  std::cout << (10 - failed) << " of 10 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
