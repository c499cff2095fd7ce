#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "friedrichs/config.hpp"
#include "friedrichs/report.hpp"
#include "friedrichs/scenario.hpp"
#include "friedrichs/selftest.hpp"

namespace {

struct CommonFlags {
  std::string preset = "paper";
  std::string config_path;
  std::string out_dir;
  double tolerance = 0.0;
  std::string dt_policy;
};

void attach(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--preset", flags.preset, "parameter preset (paper)")
      ->check(CLI::IsMember({"paper"}));
  cmd->add_option("--config", flags.config_path, "key = value config file");
  cmd->add_option("--out", flags.out_dir, "output directory");
  cmd->add_option("--tolerance", flags.tolerance, "quadrature tolerance");
  cmd->add_option("--dt-policy", flags.dt_policy,
                  "stepper time step: auto or fixed:<v>");
}

friedrichs::config::RunConfig resolve(const CommonFlags& flags,
                                      const std::string& scenario) {
  friedrichs::config::RunConfig cfg =
      flags.config_path.empty() ? friedrichs::config::preset(scenario)
                                : friedrichs::config::load(flags.config_path);
  cfg.scenario = scenario;
  if (!flags.out_dir.empty()) cfg.out_dir = flags.out_dir;
  if (flags.tolerance > 0.0) cfg.tolerance = flags.tolerance;
  if (!flags.dt_policy.empty()) cfg.dt_policy = flags.dt_policy;
  cfg.validate();
  return cfg;
}

int run_scenario(const CommonFlags& flags, const std::string& scenario) {
  const friedrichs::config::RunConfig cfg = resolve(flags, scenario);
  friedrichs::scenario::ScenarioReport rep;
  if (scenario == "survival")
    rep = friedrichs::scenario::run_survival(cfg);
  else if (scenario == "emission")
    rep = friedrichs::scenario::run_emission(cfg);
  else
    rep = friedrichs::scenario::run_correlation(cfg);
  friedrichs::report::write_run(cfg, rep);
  std::cout << friedrichs::report::metrics_text(rep);
  std::cout << "wrote " << cfg.out_dir << "/series_" << scenario << ".csv\n";
  return 0;
}

int run_pole(const CommonFlags& flags) {
  const friedrichs::config::RunConfig cfg = resolve(flags, "pole");
  const friedrichs::scenario::PoleRecord rec =
      friedrichs::scenario::report_pole(cfg);
  std::printf("z          = %.15g %+.15gi\n", rec.pole.z.real(),
              rec.pole.z.imag());
  std::printf("N          = %.15g %+.15gi\n", rec.pole.residue_N.real(),
              rec.pole.residue_N.imag());
  std::printf("decay rate = %.15g  (2|Im z|)\n", rec.decay_rate);
  std::printf("|N - 1|    = %.15g\n", rec.abs_n_minus_1);
  std::printf("|eta(z)|   = %.3e   (root residual)\n", rec.pole.eta_residual);
  std::printf("tail bound = %.3e   (neglected self-energy tail)\n",
              rec.tail_bound);
  return 0;
}

int run_selftest(const CommonFlags& flags) {
  const friedrichs::config::RunConfig cfg = resolve(flags, "selftest");
  const friedrichs::selftest::Summary summary =
      friedrichs::selftest::run(cfg.seed);
  const std::string text = friedrichs::selftest::table(summary);
  std::cout << text;
  if (!flags.out_dir.empty()) {
    std::filesystem::create_directories(cfg.out_dir);
    std::ofstream(std::filesystem::path(cfg.out_dir) / "selftest.txt") << text;
  }
  return summary.all_pass() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unstable-state decay in the Friedrichs model"};
  app.require_subcommand(1);

  CommonFlags flags;
  CLI::App* pole = app.add_subcommand("pole", "resonance pole report");
  CLI::App* survival =
      app.add_subcommand("survival", "survival probability comparison");
  CLI::App* emission =
      app.add_subcommand("emission", "emitted-field snapshot comparison");
  CLI::App* correlation =
      app.add_subcommand("correlation", "field correlation comparison");
  CLI::App* selftest =
      app.add_subcommand("selftest", "projection and restriction suites");
  for (CLI::App* cmd : {pole, survival, emission, correlation, selftest})
    attach(cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (pole->parsed()) return run_pole(flags);
    if (survival->parsed()) return run_scenario(flags, "survival");
    if (emission->parsed()) return run_scenario(flags, "emission");
    if (correlation->parsed()) return run_scenario(flags, "correlation");
    return run_selftest(flags);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  }
}
