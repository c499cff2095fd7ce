#include "friedrichs/report.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace friedrichs::report {

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("report: cannot write " + path.string());
  os << text;
}

}  // namespace

std::string series_csv(const scenario::ScenarioReport& rep) {
  std::ostringstream os;
  os.precision(15);
  os << "grid,re_total,im_total,abs2_total,re_restr,im_restr,abs2_restr,"
        "abs2_residual\n";
  for (const scenario::SeriesRow& r : rep.rows)
    os << r.grid << ',' << r.total.real() << ',' << r.total.imag() << ','
       << std::norm(r.total) << ',' << r.restr.real() << ','
       << r.restr.imag() << ',' << std::norm(r.restr) << ','
       << std::norm(r.residual) << '\n';
  return os.str();
}

std::string metrics_text(const scenario::ScenarioReport& rep) {
  std::ostringstream os;
  os.precision(15);
  os << "scenario = " << rep.scenario << "\n"
     << "pole_re = " << rep.pole.z.real() << "\n"
     << "pole_im = " << rep.pole.z.imag() << "\n"
     << "residue_re = " << rep.pole.residue_N.real() << "\n"
     << "residue_im = " << rep.pole.residue_N.imag() << "\n";
  for (const auto& [key, value] : rep.metrics)
    os << key << " = " << value << "\n";
  return os.str();
}

std::string gnuplot_script(const scenario::ScenarioReport& rep) {
  const bool time_axis = rep.scenario == "survival";
  std::ostringstream os;
  os << "set datafile separator ','\n"
     << "set key top right\n"
     << "set xlabel '" << (time_axis ? "t" : "x") << "'\n"
     << "set ylabel '|amplitude|^2'\n"
     << "set logscale y\n"
     << "set terminal pngcairo size 900,600\n"
     << "set output '" << rep.scenario << ".png'\n"
     << "plot 'series_" << rep.scenario
     << ".csv' using 1:4 skip 1 with lines title 'total', \\\n"
     << "     'series_" << rep.scenario
     << ".csv' using 1:7 skip 1 with lines dashtype 2 title 'restricted'\n";
  return os.str();
}

void write_run(const config::RunConfig& cfg,
               const scenario::ScenarioReport& rep) {
  const std::filesystem::path dir(cfg.out_dir);
  std::filesystem::create_directories(dir);
  write_file(dir / "config.echo", config::echo(cfg));
  write_file(dir / ("series_" + rep.scenario + ".csv"), series_csv(rep));
  write_file(dir / "metrics.txt", metrics_text(rep));
  write_file(dir / ("plot_" + rep.scenario + ".gp"), gnuplot_script(rep));
}

}  // namespace friedrichs::report
