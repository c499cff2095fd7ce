#include "friedrichs/spectral.hpp"

#include <cmath>
#include <numbers>

namespace friedrichs::spectral {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

// d/dw [2w/(1+(w/M)^2)^2]
Complex form_factor_sq_prime(Complex w, const ModelParams& p) {
  const double m2 = p.cutoff_M * p.cutoff_M;
  const Complex u = 1.0 + w * w / m2;
  return 2.0 / (u * u) - 8.0 * w * w / (m2 * u * u * u);
}

}  // namespace

LevelShift::LevelShift(const ModelParams& p, const LevelShiftConfig& cfg)
    : params_(p), cfg_(cfg), omega_max_(cfg.omega_max_factor * p.cutoff_M) {
  params_.validate();
}

Complex LevelShift::self_energy(Complex w) const {
  if (params_.lambda == 0.0) return {0.0, 0.0};
  const double l2 = params_.lambda * params_.lambda;
  auto f = [&](double wp) -> Complex {
    return model::form_factor_sq(Complex{wp, 0.0}, params_) / (w - wp);
  };
  // Breakpoints concentrate panels where v^2 peaks and near the
  // projection of w onto the axis.
  Complex sum{0.0, 0.0};
  double pts[] = {0.0, params_.cutoff_M, 4.0 * params_.cutoff_M, omega_max_};
  for (int k = 0; k + 1 < 4; ++k)
    sum += quad::integrate(f, pts[k], pts[k + 1], cfg_.quad);
  return l2 * sum;
}

Complex LevelShift::eta_first(Complex w) const {
  if (w.imag() == 0.0 && w.real() >= 0.0)
    throw std::domain_error(
        "eta_first: w on the continuum cut [0,inf); use eta_boundary");
  return w - params_.omega1 - self_energy(w);
}

Complex LevelShift::eta_second(Complex w) const {
  if (!(w.imag() < 0.0))
    throw std::domain_error("eta_second: requires Im w < 0");
  if (!(-w.imag() < params_.cutoff_M))
    throw std::domain_error(
        "eta_second: continuation only valid for |Im w| < M");
  const double l2 = params_.lambda * params_.lambda;
  return eta_first(w) +
         2.0 * kPi * kI * l2 * model::form_factor_sq(w, params_);
}

Complex LevelShift::eta(Complex w, Sheet sheet) const {
  return sheet == Sheet::first ? eta_first(w) : eta_second(w);
}

Complex LevelShift::self_energy_pv(double omega) const {
  if (!(omega > 0.0 && omega < omega_max_))
    throw std::domain_error("self_energy_pv: omega outside (0, Omega_max)");
  if (params_.lambda == 0.0) return {0.0, 0.0};
  const double l2 = params_.lambda * params_.lambda;
  auto f = [&](double wp) -> Complex {
    return model::form_factor_sq(Complex{wp, 0.0}, params_);
  };
  return l2 * quad::pv_integrate(f, 0.0, omega_max_, omega, cfg_.quad);
}

Complex LevelShift::eta_boundary(double omega, Branch branch) const {
  if (!(omega > 0.0))
    throw std::domain_error("eta_boundary: omega must be positive");
  const double l2 = params_.lambda * params_.lambda;
  const Complex v2 = model::form_factor_sq(Complex{omega, 0.0}, params_);
  const double sgn = branch == Branch::plus ? 1.0 : -1.0;
  return omega - params_.omega1 - self_energy_pv(omega) +
         sgn * kI * kPi * l2 * v2;
}

Complex LevelShift::eta_prime(Complex w, Sheet sheet) const {
  const double l2 = params_.lambda * params_.lambda;
  Complex d{1.0, 0.0};
  if (params_.lambda != 0.0) {
    auto f = [&](double wp) -> Complex {
      const Complex dw = w - wp;
      return model::form_factor_sq(Complex{wp, 0.0}, params_) / (dw * dw);
    };
    Complex sum{0.0, 0.0};
    double pts[] = {0.0, params_.cutoff_M, 4.0 * params_.cutoff_M, omega_max_};
    for (int k = 0; k + 1 < 4; ++k)
      sum += quad::integrate(f, pts[k], pts[k + 1], cfg_.quad);
    d += l2 * sum;
  }
  if (sheet == Sheet::second)
    d += 2.0 * kPi * kI * l2 * form_factor_sq_prime(w, params_);
  return d;
}

double LevelShift::tail_bound() const {
  // |v^2| ~ 2 M^4 / w^3 beyond the cutoff, so the dropped tail of the
  // self-energy integral is bounded by lambda^2 M^4 / Omega_max^2.
  const double l2 = params_.lambda * params_.lambda;
  const double m4 = std::pow(params_.cutoff_M, 4);
  return l2 * m4 / (omega_max_ * omega_max_);
}

Complex LevelShift::s_matrix(double omega) const {
  return eta_boundary(omega, Branch::minus) /
         eta_boundary(omega, Branch::plus);
}

ResonancePole find_pole(const LevelShift& ls, Complex guess) {
  const ModelParams& p = ls.params();
  if (guess == Complex{0.0, 0.0}) {
    const double v2 =
        model::form_factor_sq(Complex{p.omega1, 0.0}, p).real();
    guess = Complex{p.omega1, -kPi * p.lambda * p.lambda * v2};
  }
  if (!(guess.imag() < 0.0))
    throw std::domain_error("find_pole: guess must lie in the lower half plane");

  auto f = [&](Complex w) { return ls.eta_second(w); };

  // Secant iteration with a Mueller step when the secant denominator
  // degenerates.
  Complex x0 = guess;
  Complex x1 = guess * Complex{1.0 + 1e-4, 0.0} - Complex{0.0, 1e-5};
  Complex f0 = f(x0), f1 = f(x1);
  Complex x2 = x1, f2 = f1;
  bool converged = false;
  for (int it = 0; it < 100; ++it) {
    Complex dx;
    const Complex den = f1 - f0;
    if (std::abs(den) > 1e-300) {
      dx = -f1 * (x1 - x0) / den;
    } else {
      dx = Complex{1e-6, -1e-6};
    }
    x2 = x1 + dx;
    if (x2.imag() >= 0.0) x2 = Complex{x2.real(), -1e-6};  // stay on sheet
    f2 = f(x2);
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f2;
    if (std::abs(f2) < 1e-12 || std::abs(dx) < 1e-14) {
      converged = std::abs(f2) < 1e-10;
      break;
    }
  }
  if (!converged && std::abs(f2) >= 1e-10)
    throw std::runtime_error("find_pole: no convergence after max iterations");
  if (std::abs(x2 - Complex{p.omega1, 0.0}) > 1.0)
    throw std::runtime_error(
        "find_pole: converged outside the |z - omega1| < 1 basin");

  ResonancePole pole;
  pole.z = x2;
  pole.eta_residual = std::abs(f2);
  pole.residue_N = 1.0 / ls.eta_prime(x2, Sheet::second);
  pole.z_cc = std::conj(x2);
  return pole;
}

Complex coefficient_B(const LevelShift& ls, double omega_prime) {
  return ls.params().lambda *
         model::form_factor(Complex{omega_prime, 0.0}, ls.params());
}

SeparationCoefficients separation_terms(const LevelShift& ls, double omega) {
  if (!(omega > 0.0))
    throw std::domain_error("separation_terms: omega must be positive");
  SeparationCoefficients s;
  s.omega = omega;
  const Complex etap = ls.eta_boundary(omega, Branch::plus);
  const Complex etam = ls.eta_boundary(omega, Branch::minus);
  s.A = -1.0 / (2.0 * kPi * kI * etap);
  s.A_cc = 1.0 / (2.0 * kPi * kI * etam);
  // Both routes of the amplitude-ratio identity reduce to 1/(lambda*v).
  const Complex lv =
      ls.params().lambda * model::form_factor(Complex{omega, 0.0}, ls.params());
  s.amplitude_ratio_ket = (lv / etap) / (lv * lv / etap);
  s.amplitude_ratio_bra = (lv / etam) / (lv * lv / etam);
  return s;
}

Complex LSState::field_kernel(double omega_prime) const {
  if (omega_prime == omega)
    throw std::domain_error(
        "LSState::field_kernel: on-shell point is distributional, see "
        "on_shell_coeff");
  const Complex lv_prime =
      params.lambda * model::form_factor(Complex{omega_prime, 0.0}, params);
  return lambda_v_omega * lv_prime / (eta_value * (omega - omega_prime));
}

LSState ls_state(const LevelShift& ls, double omega, Branch branch) {
  if (!(omega > 0.0))
    throw std::domain_error("ls_state: omega must be positive");
  LSState st;
  st.omega = omega;
  st.branch = branch;
  st.params = ls.params();
  st.eta_value = ls.eta_boundary(omega, branch);
  st.lambda_v_omega =
      ls.params().lambda * model::form_factor(Complex{omega, 0.0}, ls.params());
  st.discrete_amp = st.lambda_v_omega / st.eta_value;
  const double sgn = branch == Branch::plus ? -1.0 : 1.0;
  st.on_shell_coeff =
      sgn * kI * kPi * st.lambda_v_omega * st.lambda_v_omega / st.eta_value;
  return st;
}

Complex gamow_field(const LevelShift& ls, const ResonancePole& pole,
                    double x) {
  const ModelParams& p = ls.params();
  const Complex z = pole.z;
  auto f = [&](double w) -> Complex {
    return p.lambda * model::form_factor(Complex{w, 0.0}, p) *
           std::cos(w * x) / (std::sqrt(kPi) * (z - w));
  };
  quad::Options opt;
  opt.max_panel = kPi / (4.0 * std::max(std::abs(x), 1.0));
  // The form factor has a sqrt(w) branch point at the spectral threshold.
  Complex integral = quad::integrate_sqrt_origin(f, p.cutoff_M, opt);
  double pts[] = {p.cutoff_M, 4.0 * p.cutoff_M, ls.omega_max()};
  for (int k = 0; k + 1 < 3; ++k)
    integral += quad::integrate(f, pts[k], pts[k + 1], opt);
  // Continuation through the cut: the residue term carries the
  // e^{i z |x|} growth of the complex eigenstate.
  const Complex residue_term = -2.0 * kPi * kI * p.lambda *
                               model::form_factor(z, p) *
                               std::cos(z * Complex{x, 0.0}) / std::sqrt(kPi);
  return std::sqrt(pole.residue_N) * (integral + residue_term);
}

}  // namespace friedrichs::spectral
