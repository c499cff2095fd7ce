#include "friedrichs/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "friedrichs/evolution.hpp"

namespace friedrichs::config {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  size_t pos = 0;
  double x;
  try {
    x = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad number for '" + key + "': " + v);
  }
  if (pos != v.size())
    throw std::invalid_argument("config: trailing junk for '" + key + "': " + v);
  return x;
}

int to_int(const std::string& key, const std::string& v) {
  const double x = to_double(key, v);
  const int n = static_cast<int>(x);
  if (x != n)
    throw std::invalid_argument("config: expected integer for '" + key + "'");
  return n;
}

}  // namespace

void RunConfig::validate() const {
  params.validate();
  if (!(box_L > 0.0) || n_modes < 1)
    throw std::invalid_argument("config: bad discretization");
  if (scenario != "survival" && scenario != "emission" &&
      scenario != "correlation" && scenario != "pole" &&
      scenario != "selftest")
    throw std::invalid_argument("config: unknown scenario '" + scenario + "'");
  if (!(tolerance > 0.0))
    throw std::invalid_argument("config: tolerance must be positive");
  if (!(t_max > t_min) || t_samples < 2)
    throw std::invalid_argument("config: empty t range");
  if (!(x_max > x_min) || x_samples < 2)
    throw std::invalid_argument("config: empty x range");
  if (scenario == "emission" || scenario == "correlation")
    if (!(t_fixed > 0.0))
      throw std::invalid_argument("config: snapshot time must be positive");
  evolution::DtPolicy::parse(dt_policy);  // throws on malformed policies
}

RunConfig preset(const std::string& scenario) {
  RunConfig cfg;
  cfg.scenario = scenario;
  if (scenario == "emission") {
    cfg.t_fixed = 10.0;
    cfg.x_min = -30.0;
    cfg.x_max = 30.0;
    cfg.x_samples = 481;
  } else if (scenario == "correlation") {
    cfg.t_fixed = 30.0;
    cfg.x2 = 15.0;
    // Position states only exist inside the box, |x| <= L/2.
    cfg.x_min = -50.0;
    cfg.x_max = 50.0;
    cfg.x_samples = 481;
  }
  cfg.validate();
  return cfg;
}

RunConfig load(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("config: cannot open " + path);
  RunConfig cfg;
  std::string line, section;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::invalid_argument("config: bad section at line " +
                                    std::to_string(lineno));
      section = trim(line.substr(1, line.size() - 2));
      if (section != "model" && section != "discretization" &&
          section != "scenario" && section != "run")
        throw std::invalid_argument("config: unknown section [" + section +
                                    "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key = value at line " +
                                  std::to_string(lineno));
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    const std::string qual = section + "." + key;

    if (qual == "model.omega1") cfg.params.omega1 = to_double(qual, val);
    else if (qual == "model.lambda") cfg.params.lambda = to_double(qual, val);
    else if (qual == "model.cutoff_m") cfg.params.cutoff_M = to_double(qual, val);
    else if (qual == "discretization.box_l") cfg.box_L = to_double(qual, val);
    else if (qual == "discretization.n_modes") cfg.n_modes = to_int(qual, val);
    else if (qual == "scenario.name") cfg.scenario = val;
    else if (qual == "scenario.t_min") cfg.t_min = to_double(qual, val);
    else if (qual == "scenario.t_max") cfg.t_max = to_double(qual, val);
    else if (qual == "scenario.t_samples") cfg.t_samples = to_int(qual, val);
    else if (qual == "scenario.t") cfg.t_fixed = to_double(qual, val);
    else if (qual == "scenario.x_min") cfg.x_min = to_double(qual, val);
    else if (qual == "scenario.x_max") cfg.x_max = to_double(qual, val);
    else if (qual == "scenario.x_samples") cfg.x_samples = to_int(qual, val);
    else if (qual == "scenario.x2") cfg.x2 = to_double(qual, val);
    else if (qual == "scenario.dt_policy") cfg.dt_policy = val;
    else if (qual == "run.tolerance") cfg.tolerance = to_double(qual, val);
    else if (qual == "run.out_dir") cfg.out_dir = val;
    else if (qual == "run.seed") cfg.seed = static_cast<unsigned>(to_int(qual, val));
    else
      throw std::invalid_argument("config: unknown key '" + qual +
                                  "' at line " + std::to_string(lineno));
  }
  cfg.validate();
  return cfg;
}

std::string echo(const RunConfig& cfg) {
  std::ostringstream os;
  os.precision(15);
  os << "[model]\n"
     << "omega1 = " << cfg.params.omega1 << "\n"
     << "lambda = " << cfg.params.lambda << "\n"
     << "cutoff_m = " << cfg.params.cutoff_M << "\n\n"
     << "[discretization]\n"
     << "box_l = " << cfg.box_L << "\n"
     << "n_modes = " << cfg.n_modes << "\n\n"
     << "[scenario]\n"
     << "name = " << cfg.scenario << "\n"
     << "t_min = " << cfg.t_min << "\n"
     << "t_max = " << cfg.t_max << "\n"
     << "t_samples = " << cfg.t_samples << "\n"
     << "t = " << cfg.t_fixed << "\n"
     << "x_min = " << cfg.x_min << "\n"
     << "x_max = " << cfg.x_max << "\n"
     << "x_samples = " << cfg.x_samples << "\n"
     << "x2 = " << cfg.x2 << "\n"
     << "dt_policy = " << cfg.dt_policy << "\n\n"
     << "[run]\n"
     << "tolerance = " << cfg.tolerance << "\n"
     << "out_dir = " << cfg.out_dir << "\n"
     << "seed = " << cfg.seed << "\n";
  return os.str();
}

}  // namespace friedrichs::config
