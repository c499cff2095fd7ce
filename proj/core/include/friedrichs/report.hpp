#pragma once

#include <string>

#include "friedrichs/config.hpp"
#include "friedrichs/scenario.hpp"

namespace friedrichs::report {

/// Writes the run directory: config.echo, series_<scenario>.csv
/// (grid, re_total, im_total, abs2_total, re_restr, im_restr, abs2_restr,
/// abs2_residual; 15 significant digits), metrics.txt (flat key = value),
/// and plot_<scenario>.gp reproducing the figure. Creates the directory
/// if needed; deterministic byte-for-byte for a fixed (config, seed).
void write_run(const config::RunConfig& cfg,
               const scenario::ScenarioReport& rep);

std::string series_csv(const scenario::ScenarioReport& rep);
std::string metrics_text(const scenario::ScenarioReport& rep);
std::string gnuplot_script(const scenario::ScenarioReport& rep);

}  // namespace friedrichs::report
