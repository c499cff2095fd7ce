#include "friedrichs/hardy.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace friedrichs::hardy {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

void check_input(const SampledFunction& f) {
  if (f.size() < 4 || (f.size() & (f.size() - 1)) != 0)
    throw std::invalid_argument(
        "hardy: grid size must be a power of two, >= 4");
  if (!(f.omega_max > 0.0))
    throw std::invalid_argument("hardy: omega_max must be positive");
  double maxabs = 0.0;
  for (const Complex& v : f.values) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("hardy: non-finite sample value");
    maxabs = std::max(maxabs, std::abs(v));
  }
  const double edge = std::max(std::abs(f.values.front()),
                               std::abs(f.values.back()));
  if (!f.one_sided && maxabs > 0.0 && edge > 1e-6 * maxabs)
    std::fprintf(stderr,
                 "hardy: warning: |f| at grid edge is %.2e of max, window "
                 "may be too narrow (%s)\n",
                 edge / maxabs, f.label.c_str());
}

// Forward transform with the e^{-i w t} kernel: bins 0 < m < n/2 of the
// FFTW_FORWARD output correspond to t > 0.
std::vector<Complex> to_time(const std::vector<Complex>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<Complex> out(n);
  fftw_plan plan = fftw_plan_dft_1d(
      n,
      reinterpret_cast<fftw_complex*>(const_cast<Complex*>(v.data())),
      reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD,
      FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  return out;
}

std::vector<Complex> to_frequency(std::vector<Complex>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<Complex> out(n);
  fftw_plan plan = fftw_plan_dft_1d(
      n, reinterpret_cast<fftw_complex*>(v.data()),
      reinterpret_cast<fftw_complex*>(out.data()), FFTW_BACKWARD,
      FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  for (Complex& c : out) c /= static_cast<double>(n);
  return out;
}

}  // namespace

double SampledFunction::norm2() const {
  double s = 0.0;
  for (const Complex& v : values) s += std::norm(v);
  return std::sqrt(s * spacing());
}

SampledFunction project(const SampledFunction& f, Sign sign) {
  check_input(f);
  const int n = f.size();
  std::vector<Complex> time = to_time(f.values);

  // Mask the t < 0 half line for [f]+ (kept part decays analytically into
  // the upper half plane), t > 0 for [f]-. The t = 0 and Nyquist bins are
  // self-conjugate under time reversal, so a plain 1/2 split cannot be
  // idempotent; the real-linear rule c -> (c -+ i conj c)/2 is a genuine
  // projection there and still sums to the identity and commutes with
  // conjugation (which swaps the two half lines).
  const auto split = [sign](Complex c) {
    const Complex t = kI * std::conj(c);
    return (sign == Sign::plus) ? 0.5 * (c - t) : 0.5 * (c + t);
  };
  time[0] = split(time[0]);
  time[n / 2] = split(time[n / 2]);
  if (sign == Sign::plus) {
    for (int m = n / 2 + 1; m < n; ++m) time[m] = 0.0;
  } else {
    for (int m = 1; m < n / 2; ++m) time[m] = 0.0;
  }

  SampledFunction out;
  out.omega_max = f.omega_max;
  out.one_sided = true;
  out.label = f.label + (sign == Sign::plus ? "+" : "-");
  out.values = to_frequency(time);
  return out;
}

HardyPair decompose(const SampledFunction& f) {
  HardyPair pair;
  pair.plus = project(f, Sign::plus);
  pair.minus = project(f, Sign::minus);
  double num = 0.0;
  for (int k = 0; k < f.size(); ++k)
    num += std::norm(pair.plus.values[k] + pair.minus.values[k] -
                     f.values[k]);
  const double den = f.norm2();
  pair.recon_residual =
      den > 0.0 ? std::sqrt(num * f.spacing()) / den : 0.0;
  return pair;
}

Complex eval_complex(const SampledFunction& f_projected, Sign sign,
                     Complex y) {
  if (y.imag() == 0.0)
    throw std::domain_error("eval_complex: y must be off the real axis");
  if (std::abs(y.imag()) < 3.0 * f_projected.spacing())
    std::fprintf(stderr,
                 "hardy: warning: eval point is %.2e from the axis, closer "
                 "than 3 grid spacings; accuracy degrades\n",
                 std::abs(y.imag()));
  const double pref = (sign == Sign::plus) ? -1.0 : 1.0;
  Complex sum{0.0, 0.0};
  const int n = f_projected.size();
  for (int k = 0; k < n; ++k) {
    // Trapezoid on the periodic grid: uniform weights, endpoints wrap.
    sum += f_projected.values[k] / (y - f_projected.omega(k));
  }
  return pref * sum * f_projected.spacing() / (2.0 * kPi * kI);
}

double paley_wiener_residual(const SampledFunction& f, Sign sign) {
  check_input(f);
  const int n = f.size();
  std::vector<Complex> time = to_time(f.values);
  double max_all = 0.0, max_forbidden = 0.0;
  for (int m = 0; m < n; ++m) {
    const double a = std::abs(time[m]);
    max_all = std::max(max_all, a);
    const bool positive_t = m > 0 && m < n / 2;
    const bool negative_t = m > n / 2;
    const bool forbidden = (sign == Sign::plus) ? negative_t : positive_t;
    if (forbidden) max_forbidden = std::max(max_forbidden, a);
  }
  return max_all > 0.0 ? max_forbidden / max_all : 0.0;
}

void write_csv(const SampledFunction& f, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_csv: cannot open " + path);
  os.precision(15);
  os << "omega,re,im\n";
  for (int k = 0; k < f.size(); ++k)
    os << f.omega(k) << ',' << f.values[k].real() << ','
       << f.values[k].imag() << '\n';
}

SampledFunction read_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("read_csv: cannot open " + path);
  std::string line;
  std::getline(is, line);  // header
  std::vector<double> omegas;
  SampledFunction f;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    double w, re, im;
    char c1, c2;
    if (!(ls >> w >> c1 >> re >> c2 >> im))
      throw std::runtime_error("read_csv: malformed line: " + line);
    omegas.push_back(w);
    f.values.emplace_back(re, im);
  }
  if (omegas.size() < 2) throw std::runtime_error("read_csv: too few rows");
  const double dw = omegas[1] - omegas[0];
  f.omega_max = -omegas.front();
  if (std::abs(f.omega_max - dw * f.size() / 2.0) > 1e-9 * f.omega_max)
    throw std::runtime_error("read_csv: grid is not the expected symmetric "
                             "uniform grid");
  return f;
}

}  // namespace friedrichs::hardy
