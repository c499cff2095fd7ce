#pragma once

#include <complex>
#include <functional>
#include <stdexcept>

namespace friedrichs::quad {

using Complex = std::complex<double>;

/// Thrown when adaptive subdivision cannot reach the requested tolerance.
struct ToleranceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 40;
  /// Upper bound on panel width; 0 disables. Used to resolve e^{-i a w}
  /// oscillations (set to a fraction of the period).
  double max_panel = 0.0;
};

/// Adaptive Gauss-Kronrod (G7,K15) on [a,b] for a complex-valued integrand.
Complex integrate(const std::function<Complex(double)>& f, double a, double b,
                  const Options& opt = {});

/// \int_0^b f(w) dw for integrands with a sqrt(w)-type branch point at 0,
/// via the substitution w = u^2 (the Jacobian 2u absorbs the singular
/// derivative). max_panel is reinterpreted in u at the w = b end, where
/// the oscillation in u is fastest.
Complex integrate_sqrt_origin(const std::function<Complex(double)>& f,
                              double b, const Options& opt = {});

/// Cauchy principal value of \int_a^b f(w)/(s-w) dw with s in (a,b),
/// by singularity subtraction:
///   PV = \int (f(w)-f(s))/(s-w) dw + f(s)*log((s-a)/(b-s)).
Complex pv_integrate(const std::function<Complex(double)>& f, double a,
                     double b, double s, const Options& opt = {});

}  // namespace friedrichs::quad
