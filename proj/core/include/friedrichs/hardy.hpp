#pragma once

#include <complex>
#include <string>
#include <vector>

namespace friedrichs::hardy {

using Complex = std::complex<double>;

enum class Sign { plus, minus };

/// Complex-valued function sampled on the uniform grid
/// omega_k = -omega_max + k * (2*omega_max/n), k = 0..n-1 (periodic
/// convention, right endpoint excluded). n should be a power of two.
struct SampledFunction {
  double omega_max = 0.0;
  std::vector<Complex> values;
  std::string label;
  // Set on projection outputs: their 1/omega tails are expected, so the
  // narrow-window warning is suppressed when they are fed back in.
  bool one_sided = false;

  int size() const { return static_cast<int>(values.size()); }
  double spacing() const { return 2.0 * omega_max / size(); }
  double omega(int k) const { return -omega_max + k * spacing(); }
  double norm2() const;  // L2 norm, sqrt(sum |f|^2 * dw)

  template <class F>
  static SampledFunction sample(double omega_max, int n, F&& f,
                                std::string label = {}) {
    SampledFunction s;
    s.omega_max = omega_max;
    s.values.resize(n);
    s.label = std::move(label);
    for (int k = 0; k < n; ++k) s.values[k] = f(s.omega(k));
    return s;
  }
};

/// Half-plane projection [f]^{+-} by FFT masking: transform to the
/// conjugate (time) domain, zero the Paley-Wiener-forbidden half line
/// (t < 0 for +, t > 0 for -; the self-conjugate t = 0 and Nyquist bins use
/// the real-linear split c -> (c -+ i conj c)/2), transform back. Exactly
/// idempotent and complete with its opposite-sign partner, and commutes
/// with conjugation. Throws std::invalid_argument on NaN input;
/// emits a stderr warning when |f| at the grid boundary exceeds
/// 1e-6 * max|f| (window too narrow).
SampledFunction project(const SampledFunction& f, Sign sign);

struct HardyPair {
  SampledFunction plus;
  SampledFunction minus;
  double recon_residual = 0.0;  // ||plus + minus - f||_2 / ||f||_2
};

HardyPair decompose(const SampledFunction& f);

/// Analytic continuation of the projected function at complex y:
/// -+ (1/2*pi*i) \int f(w')/(y - w') dw' by trapezoidal quadrature over
/// the grid (tails beyond the grid neglected). sign = minus requires
/// Im y < 0 to be nonzero; the wrong side returns the (near-zero)
/// quadrature value of the vanishing Cauchy integral.
Complex eval_complex(const SampledFunction& f_projected, Sign sign, Complex y);

/// max |g_hat(t)| over the forbidden half line, normalized by the overall
/// max |g_hat| (g_hat = conjugate-domain transform of f).
double paley_wiener_residual(const SampledFunction& f, Sign sign);

/// Two-column-per-part CSV (omega, re, im) round trip for the self-test CLI.
void write_csv(const SampledFunction& f, const std::string& path);
SampledFunction read_csv(const std::string& path);

}  // namespace friedrichs::hardy
