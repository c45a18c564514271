#include <CLI11.hpp>
#include <iostream>

#include "macorr/cli.hpp"
#include "macorr/spectral.hpp"

namespace {

void add_common(CLI::App* app, macorr::RunConfig& c) {
  app->add_option("--n", c.n, "grid size (power of two)");
  app->add_option("--K", c.K, "quadruple steps per stage");
  app->add_option("--N", c.N, "Kallen rounds");
  app->add_option("--gamma", c.gamma, "amplitude exponent gamma");
  app->add_option("--sigma", c.sigma, "ladder ratio sigma = lambda*l");
  app->add_option("--l", c.l, "mollification scale");
  app->add_option("--lambda", c.lambda, "base frequency (overrides --sigma)");
  app->add_option("--theta", c.theta, "schedule contraction of l");
  app->add_option("--sigma0", c.sigma0, "lower bound for lambda^(1-gamma) l");
  app->add_option("--margin", c.margin, "subsolution margin");
  app->add_option("--f", c.f, "right-hand side: sines, zero, mode3, offset or a .fld path");
  app->add_option("--out", c.out, "output directory");
  app->add_option("--seed", c.seed, "seed for randomized batteries");
  app->add_option("--target-defect", c.target_defect, "stop once sup defect falls below this");
  app->add_option("--stages", c.stages, "number of stages");
  app->add_option("--inputs", c.inputs, "random inputs per verification suite");
}

}  // namespace

int main(int argc, char** argv) {
  macorr::tune_allocator();
  CLI::App app{"macorr: convex integration for the von Karman and Monge-Ampere systems on the torus"};
  app.require_subcommand(1);
  macorr::RunConfig cfg;
  auto* verify = app.add_subcommand("verify", "run the identity and property suites");
  auto* rates = app.add_subcommand("rates", "run the rate sweeps and fits");
  auto* solve = app.add_subcommand("solve", "run the Nash-Kuiper scheme end to end");
  for (auto* s : {verify, rates, solve}) add_common(s, cfg);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : macorr::kExitConfig;
  }
  if (verify->parsed()) {
    cfg.command = "verify";
    return macorr::cmd_verify(cfg);
  }
  if (rates->parsed()) {
    cfg.command = "rates";
    return macorr::cmd_rates(cfg);
  }
  cfg.command = "solve";
  return macorr::cmd_solve(cfg);
}
