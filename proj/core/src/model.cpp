#include "friedrichs/model.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace friedrichs::model {

namespace {
constexpr double kPi = std::numbers::pi;
}

void ModelParams::validate() const {
  if (!(omega1 > 0.0))
    throw std::invalid_argument("ModelParams: omega1 must be positive");
  if (!(lambda >= 0.0))
    throw std::invalid_argument("ModelParams: lambda must be nonnegative");
  if (lambda >= 0.5)
    throw std::invalid_argument(
        "ModelParams: lambda >= 0.5 is outside the validated weak-coupling "
        "regime");
  if (!(cutoff_M > 0.0))
    throw std::invalid_argument("ModelParams: cutoff_M must be positive");
}

ModelParams paper_params() { return ModelParams{2.0, 0.1, 5.0}; }

Complex form_factor_sq(Complex w, const ModelParams& p) {
  const Complex r = w / p.cutoff_M;
  const Complex den = 1.0 + r * r;
  if (std::abs(den) < 1e-14)
    throw std::domain_error("form_factor_sq: pole at w = +-i*M");
  return 2.0 * w / (den * den);
}

Complex form_factor(Complex w, const ModelParams& p) {
  if (w.imag() == 0.0 && w.real() < 0.0)
    throw std::domain_error("form_factor: w on the branch cut (-inf, 0)");
  const Complex r = w / p.cutoff_M;
  const Complex den = 1.0 + r * r;
  if (std::abs(den) < 1e-14)
    throw std::domain_error("form_factor: pole at w = +-i*M");
  return std::sqrt(2.0) * std::sqrt(w) / den;  // principal branch
}

DiscreteModel discretize(const ModelParams& p, double box_L, int n_modes) {
  p.validate();
  if (!(box_L > 0.0))
    throw std::invalid_argument("discretize: box_L must be positive");
  if (n_modes < 1)
    throw std::invalid_argument("discretize: n_modes must be >= 1");

  if (2.0 * kPi * n_modes / box_L < 10.0 * p.cutoff_M)
    std::fprintf(stderr,
                 "discretize: warning: omega_max = %.3g < 10*M, ultraviolet "
                 "cutoff under-resolved\n",
                 2.0 * kPi * n_modes / box_L);

  DiscreteModel dm;
  dm.params = p;
  dm.box_L = box_L;
  dm.n_modes = n_modes;
  dm.omega_grid.resize(n_modes);
  dm.coupling.resize(n_modes);
  const double dw = 2.0 * kPi / box_L;
  const double cpl = 2.0 * std::sqrt(kPi / box_L);
  for (int n = 1; n <= n_modes; ++n) {
    const double w = dw * n;
    dm.omega_grid[n - 1] = w;
    const double r = w / p.cutoff_M;
    dm.coupling[n - 1] = cpl * std::sqrt(w) / (r * r + 1.0);
  }
  return dm;
}

DiscreteModel paper_preset() { return discretize(paper_params(), 100.0, 1200); }

HermitianMatrix assemble_hamiltonian(const DiscreteModel& dm) {
  const int d = dm.dim();
  HermitianMatrix h;
  h.entries = Eigen::MatrixXd::Zero(d, d);
  h.entries(0, 0) = dm.params.omega1;
  for (int n = 1; n < d; ++n) {
    h.entries(n, n) = dm.omega_grid[n - 1];
    const double c = dm.params.lambda * dm.coupling[n - 1];
    h.entries(0, n) = c;
    h.entries(n, 0) = c;
  }
  return h;
}

double position_overlap(const DiscreteModel& dm, int n, double x) {
  if (n < 1 || n > dm.n_modes)
    throw std::out_of_range("position_overlap: mode index out of range");
  if (std::abs(x) > 0.5 * dm.box_L)
    throw std::out_of_range("position_overlap: |x| exceeds box half-width");
  return std::sqrt(2.0 / dm.box_L) * std::cos(dm.omega_grid[n - 1] * x);
}

}  // namespace friedrichs::model
