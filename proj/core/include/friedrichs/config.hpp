#pragma once

#include <string>

#include "friedrichs/model.hpp"

namespace friedrichs::config {

/// One run of the CLI: model, discretization, scenario arguments, and
/// output knobs. Defaults reproduce the reference parameter set.
struct RunConfig {
  model::ModelParams params;  // [model] omega1, lambda, cutoff_m
  double box_L = 100.0;       // [discretization] box_l
  int n_modes = 1200;         //                  n_modes

  std::string scenario = "survival";  // [scenario] name
  double t_min = -30.0;               // survival grid
  double t_max = 30.0;
  int t_samples = 241;
  double t_fixed = 10.0;  // emission / correlation snapshot time
  double x_min = -30.0;   // emission x grid / correlation x1 grid
  double x_max = 30.0;
  int x_samples = 481;
  double x2 = 15.0;
  std::string dt_policy = "auto";  // "auto" or "fixed:<v>"

  double tolerance = 1e-10;   // [run]
  std::string out_dir = "out";
  unsigned seed = 1234;

  void validate() const;  // throws std::invalid_argument
};

/// Reference presets per scenario (survival: t in [-30,30]; emission:
/// t=10, x in [-30,30]; correlation: t=30, x2=15, x1 in [-50,50]).
RunConfig preset(const std::string& scenario);

/// Flat `key = value` file with [section] headers; '#' comments. Unknown
/// sections or keys are hard errors, as are malformed values.
RunConfig load(const std::string& path);

/// Full round-trippable echo of the effective configuration.
std::string echo(const RunConfig& cfg);

}  // namespace friedrichs::config
