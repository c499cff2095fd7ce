#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

namespace friedrichs::model {

using Complex = std::complex<double>;

/// Physical constants of the Hamiltonian: a discrete level of energy
/// omega1 embedded in a half-line continuum, coupled with strength
/// lambda through a form factor with ultraviolet scale cutoff_M.
/// The square root in the form factor takes its branch cut on the
/// negative real axis (fixed convention).
struct ModelParams {
  double omega1 = 2.0;
  double lambda = 0.1;
  double cutoff_M = 5.0;

  void validate() const;
};

/// Parameters used throughout the reference numerical experiments:
/// omega1 = 2, lambda = 0.1, M = 5.
ModelParams paper_params();

/// Form factor v(w) = sqrt(2) * sqrt(w) / (1 + (w/M)^2), principal square
/// root. Throws std::domain_error on the branch cut (negative real axis)
/// and at the double poles w = +-iM.
Complex form_factor(Complex w, const ModelParams& p);

/// v(w)^2 = 2w / (1 + (w/M)^2)^2 computed without any square root, so it
/// is single-valued everywhere except the poles at +-iM.
Complex form_factor_sq(Complex w, const ModelParams& p);

/// Box discretization: modes omega_n = 2*pi*n/L for n = 1..n_modes, with
/// couplings V_n = 2*sqrt(pi/L) * sqrt(omega_n) / ((omega_n/M)^2 + 1).
struct DiscreteModel {
  ModelParams params;
  double box_L = 0.0;
  int n_modes = 0;
  std::vector<double> omega_grid;
  std::vector<double> coupling;

  int dim() const { return n_modes + 1; }
};

DiscreteModel discretize(const ModelParams& p, double box_L, int n_modes);

/// Paper preset: L = 100, N = 1200 modes on top of paper_params().
DiscreteModel paper_preset();

/// Arrowhead matrix: diagonal (omega1, omega_1..omega_N), row/column 0
/// holding lambda*V_n. Real symmetric by construction.
struct HermitianMatrix {
  Eigen::MatrixXd entries;
  int dim() const { return static_cast<int>(entries.rows()); }
};

HermitianMatrix assemble_hamiltonian(const DiscreteModel& dm);

/// <omega_n|x> = sqrt(2/L) cos(omega_n x). Throws std::out_of_range for
/// |x| > L/2 or n outside 1..n_modes.
double position_overlap(const DiscreteModel& dm, int n, double x);

}  // namespace friedrichs::model
