#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "friedrichs/model.hpp"

namespace friedrichs::evolution {

using Complex = std::complex<double>;
using State = Eigen::VectorXcd;
using model::DiscreteModel;

/// Eigendecomposition of the arrowhead Hamiltonian, cached for repeated
/// exact propagation.
class Spectrum {
 public:
  explicit Spectrum(const DiscreteModel& dm);

  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }

  /// e^{-iHt} psi through the spectral representation; exact up to the
  /// diagonalization itself.
  State propagate(const State& psi, double t) const;

 private:
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
};

/// One (2,2) Pade step of e^{-iH dt}: unitary to roundoff, error
/// O(dt^5) per step. The two linear solves use the arrowhead structure,
/// so a step is O(n) instead of O(n^2).
class Cn4Stepper {
 public:
  Cn4Stepper(const DiscreteModel& dm, double dt);

  double dt() const { return dt_; }
  void step(State& psi) const;
  State propagate(State psi, double t) const;  // t must be a multiple of dt

 private:
  // (H - sigma) x = y with sigma complex, using the bordered structure.
  State solve_shifted(const State& y, Complex sigma) const;

  const DiscreteModel* dm_;
  double dt_;
};

/// Initial states. kind = "discrete" is the unstable level e_0;
/// kind = "mode" is a single continuum mode (index in [1, n_modes]).
State make_discrete_state(const DiscreteModel& dm);
State make_mode_state(const DiscreteModel& dm, int n);
/// |x> expanded over the box modes: components sqrt(2/L) cos(omega_n x).
State make_position_state(const DiscreteModel& dm, double x);

/// <x| psi> = sum_n sqrt(2/L) cos(omega_n x) psi_n over the field modes.
/// This directly approximates the continuum position amplitude.
Complex position_amplitude(const DiscreteModel& dm, const State& psi,
                           double x);

/// Survival amplitude <e0|psi>.
inline Complex discrete_amplitude(const State& psi) { return psi(0); }

struct DtPolicy {
  bool automatic = true;
  double fixed_dt = 0.0;  // used when automatic == false

  static DtPolicy parse(const std::string& text);  // "auto" or "fixed:<v>"
};

/// Pick dt by halving from 0.02 until the max amplitude change at the
/// probe time is below `tol`, validated against the exact spectrum on a
/// reduced probe if `reference` is supplied.
double choose_dt(const DiscreteModel& dm, const State& psi0, double t_probe,
                 double tol = 1e-6);

}  // namespace friedrichs::evolution
