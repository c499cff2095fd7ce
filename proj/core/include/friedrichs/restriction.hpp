#pragma once

#include <array>
#include <complex>
#include <vector>

#include "friedrichs/hardy.hpp"
#include "friedrichs/spectral.hpp"

namespace friedrichs::restriction {

using Complex = std::complex<double>;

/// Finite sum of exponentials sum_k c_k e^{-i a_k omega}. Closed under
/// products and under the analytic half-plane split (e^{-i a omega} lies
/// in H- for a > 0, H+ for a < 0, and splits half/half at a = 0,
/// matching the Theta(0) = 1/2 convention). This is the exact algebra
/// behind the Theta-front structure of the restricted amplitudes.
struct ExpSum {
  struct Term {
    Complex c;
    double a;
  };
  std::vector<Term> terms;

  static ExpSum exponential(Complex c, double a);
  /// cos(omega x)/norm as a two-term sum.
  static ExpSum cosine(double x, double norm);

  ExpSum operator*(const ExpSum& other) const;
  ExpSum hardy_part(hardy::Sign sign) const;
  /// sum c_k e^{-i a_k z}; meaningful after hardy_part with the sign
  /// matching the half plane of z.
  Complex eval(Complex z) const;
};

/// K(z, x) = (1/2*pi*i) \int_0^Omega v(w) cos(w x) / (sqrt(pi)(z - w)) dw,
/// the minus-class continuation of Theta(w) v_w <w|x> at z. Oscillation
/// controlled with panel caps ~ pi/(4 max(|x|,1)).
Complex k_kernel(const spectral::LevelShift& ls, Complex z, double x);

/// Theta(t) N e^{-i z t} + Theta(-t) conj(N) e^{-i conj(z) t},
/// Theta(0) = 1/2. Exactly exponential on each side.
Complex restricted_survival(const spectral::ResonancePole& pole, double t);

/// Pole part of the emission amplitude <1|e^{-iHt}|x> with test functions
/// restricted to the lower half plane:
///   -2*pi*i N lambda ( v(z) [cos(w x)/sqrt(pi) e^{-iwt}]^-(z)
///                      - e^{-izt} K(z, x) ),
/// where the bracket evaluates to (Theta(t-|x|)e^{-iz(t-|x|)}
/// + e^{-iz(t+|x|)}) / (2 sqrt(pi)): a causal front at |x| = t.
/// Requires t > 0 (the mirror pole does not contribute there).
Complex restricted_emission(const spectral::LevelShift& ls,
                            const spectral::ResonancePole& pole, double t,
                            double x);

/// Pole part of the field correlation <x1|e^{-iHt}|x2>, the six-term
/// restricted expansion: -4*pi^2 N [ (lv_z)^2 [feg]^-
///   - (lv_z)^2 [[fe]^+ g]^- - lv_z [fe]^- lK2 - (lv_z)^2 [f[eg]^+]^-
///   - lK1 lv_z [eg]^- + lK1 e^{-izt} lK2 ](z),
/// f = cos(w x1)/sqrt(pi), g = cos(w x2)/sqrt(pi), e = e^{-iwt},
/// lv_z = lambda v(z), lKj = lambda K(z, xj). Requires t > 0.
Complex restricted_correlation(const spectral::LevelShift& ls,
                               const spectral::ResonancePole& pole, double t,
                               double x1, double x2);

/// Free-field part of the correlation at sharp cutoff Omega: four delta
/// fronts plus a smooth oscillatory integral.
struct FreeFieldCorrelation {
  std::array<double, 4> delta_positions;  // x1 locations of the fronts
  double delta_weight = 0.25;
  Complex smooth;              // -(i/pi) \int_0^Omega cos(w x1) sin(w t) cos(w x2) dw
  double cutoff_sensitivity;   // |smooth(Omega) - smooth(0.9 Omega)|
};

FreeFieldCorrelation free_field_correlation(double t, double x1, double x2,
                                            double omega_max);

// ---- generic grid operators (property tests and the self-test CLI) ----

/// Which pole the restriction is built around: lower = z (take H- parts),
/// upper = z^cc (take H+ parts, the sign-mirrored rules).
enum class PoleSide { lower, upper };

/// The four structural cases of the pole-contour integrand.
struct RestrictionCase {
  enum class Tag { e_only, e_bracket_f, e_bracket_g, double_bracket };
  Tag tag = Tag::e_only;
  double t = 0.0;
  hardy::SampledFunction f;         // e_bracket_f, double_bracket
  hardy::SampledFunction g;         // e_bracket_g, double_bracket
  hardy::SampledFunction system_b;  // Theta(w) lambda v(w) on the same grid

  void validate() const;  // missing constituents, grid mismatch
};

/// Full case value F on the grid (brackets realized by FFT projection,
/// e^{-iwt} by direct samples).
hardy::SampledFunction case_value(const RestrictionCase& c, PoleSide side);

struct GridRestriction {
  std::vector<hardy::SampledFunction> terms;
  hardy::SampledFunction sum;
};

/// (F)^{T_sign} on the grid. For side = lower the rules are Eqs.-(63..66)
/// style: T- collects every piece carrying e^- or a final minus bracket;
/// T+ is the complement. side = upper mirrors every sign.
GridRestriction t_restrict(const RestrictionCase& c, PoleSide side,
                           hardy::Sign sign);

/// max norm of ((F)^{T_main})^{T_complement} composed term by term: terms
/// assigned wholly to T_main contribute zero, single-bracket terms are
/// re-projected with the opposite mask.
double t_orthogonality_residual(const RestrictionCase& c, PoleSide side);

/// Preservation check: when f, g and e are all in the pole's Hardy class,
/// the five correction terms of the double-bracket T vanish; returns their
/// max norm relative to the leading term.
double t_collapse_residual(const RestrictionCase& c, PoleSide side);

}  // namespace friedrichs::restriction
