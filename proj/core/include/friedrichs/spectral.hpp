#pragma once

#include <complex>

#include "friedrichs/model.hpp"
#include "friedrichs/quadrature.hpp"

namespace friedrichs::spectral {

using Complex = std::complex<double>;
using model::ModelParams;

enum class Sheet { first, second };
enum class Branch { plus, minus };

struct LevelShiftConfig {
  quad::Options quad;
  /// Truncation of the self-energy integral, as a multiple of cutoff_M.
  /// The discarded tail is O(lambda^2 M^4 / Omega_max^2); see tail_bound().
  double omega_max_factor = 12.0;
};

/// Level-shift function eta(w) = w - omega1 - lambda^2 \int_0^Omega
/// v(w')^2/(w-w') dw' and its continuation through the continuum cut.
/// All evaluations are pure; safe for concurrent use.
class LevelShift {
 public:
  LevelShift(const ModelParams& p, const LevelShiftConfig& cfg = {});

  const ModelParams& params() const { return params_; }
  double omega_max() const { return omega_max_; }

  /// First sheet, w off [0, inf).
  Complex eta_first(Complex w) const;

  /// Second sheet (continuation of eta+ through the cut), requires
  /// Im w < 0 and |Im w| < M: eta_II(w) = eta_I(w) + 2*pi*i*lambda^2*v(w)^2.
  Complex eta_second(Complex w) const;

  Complex eta(Complex w, Sheet sheet) const;

  /// Boundary values eta+-(omega) at real omega > 0, realized as
  /// PV integral plus the explicit +-i*pi*lambda^2*v^2 term (no finite
  /// epsilon anywhere).
  Complex eta_boundary(double omega, Branch branch) const;

  /// d/dw eta on the requested sheet. The rational v^2 part is
  /// differentiated in closed form; the self-energy derivative is
  /// \int v^2/(w-w')^2 dw' by quadrature.
  Complex eta_prime(Complex w, Sheet sheet) const;

  /// PV \int_0^Omega lambda^2 v^2(w')/(omega-w') dw' at real omega in
  /// (0, Omega).
  Complex self_energy_pv(double omega) const;

  /// Magnitude bound on the neglected self-energy tail beyond omega_max.
  double tail_bound() const;

  /// S(omega) = eta-(omega)/eta+(omega), unimodular on the real axis.
  Complex s_matrix(double omega) const;

 private:
  Complex self_energy(Complex w) const;

  ModelParams params_;
  LevelShiftConfig cfg_;
  double omega_max_;
};

/// Second-sheet zero of eta, its residue N = 1/eta_II'(z), and the
/// mirrored conjugate point.
struct ResonancePole {
  Complex z;
  Complex residue_N;
  Complex z_cc;
  double eta_residual = 0.0;  // |eta_II(z)| at convergence
};

/// Secant iteration (Mueller fallback) on eta_II starting from `guess`
/// in the lower half plane. Defaults to the perturbative guess
/// omega1 - i*pi*lambda^2*v(omega1)^2 when guess == 0.
ResonancePole find_pole(const LevelShift& ls, Complex guess = {0.0, 0.0});

/// Pole-separation coefficients of the resolvent, Friedrichs specialization:
/// A = -1/(2*pi*i*eta+), A^c = +1/(2*pi*i*eta-), B(w') = lambda*v(w').
struct SeparationCoefficients {
  Complex A;
  Complex A_cc;
  double omega;
  /// Self-check: the two algebraic routes of the bra/ket amplitude ratio,
  /// both equal to 1/(lambda*v(omega)).
  Complex amplitude_ratio_ket;
  Complex amplitude_ratio_bra;
};

SeparationCoefficients separation_terms(const LevelShift& ls, double omega);

Complex coefficient_B(const LevelShift& ls, double omega_prime);

/// Lippmann-Schwinger eigenstate structure at real omega: the discrete
/// amplitude lambda*v/eta^{+-} and the split field kernel
/// delta(w'-w) + PV-smooth part -+ i*pi on-shell part.
struct LSState {
  double omega;
  Branch branch;
  Complex discrete_amp;
  /// Smooth kernel at w' != omega: lambda^2 v(omega) v(w') / (eta^{+-} (omega - w')).
  Complex field_kernel(double omega_prime) const;
  /// Coefficient of the -+i*pi*delta(omega - w') on-shell term.
  Complex on_shell_coeff;

  Complex lambda_v_omega;
  Complex eta_value;
  ModelParams params;
};

LSState ls_state(const LevelShift& ls, double omega, Branch branch);

/// Spatial profile of the lower-half-plane complex eigenstate:
/// <x|phi_z> = sqrt(N) * [ \int_0^Omega lambda v(w) cos(w x)/(sqrt(pi)(z-w)) dw
///                         - 2*pi*i*lambda*v(z)*cos(z x)/sqrt(pi) ],
/// the integral continued from the upper half plane through the cut
/// (the second term carries the e^{i z |x|} spatial growth).
Complex gamow_field(const LevelShift& ls, const ResonancePole& pole, double x);

}  // namespace friedrichs::spectral
