// End-to-end acceptance gate: one pass/fail line per criterion, nonzero
// exit if any fail. Oracle comparisons use the independent methods in
// oracles.{hpp,cpp} (adaptive Simpson, Mueller), never the library's own
// quadrature or root finder.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "friedrichs/config.hpp"
#include "friedrichs/evolution.hpp"
#include "friedrichs/hardy.hpp"
#include "friedrichs/restriction.hpp"
#include "friedrichs/scenario.hpp"
#include "friedrichs/selftest.hpp"
#include "friedrichs/spectral.hpp"
#include "oracles.hpp"

using namespace friedrichs;
using Complex = std::complex<double>;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

void report(int idx, const std::string& what, bool pass,
            const std::string& detail) {
  std::printf("[%s] %2d %-34s %s\n", pass ? "PASS" : "FAIL", idx, what.c_str(),
              detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0,
                double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main() {
  const model::ModelParams params = model::paper_params();
  const spectral::LevelShift ls(params);

  // 1. Resonance pole: location, residual, independent root finder, speed.
  spectral::ResonancePole pole;
  {
    const auto t0 = Clock::now();
    pole = spectral::find_pole(ls);
    const double elapsed = seconds_since(t0);
    const Complex z_oracle = oracles::EtaOracle{}.find_zero();
    const double dev = std::abs(pole.z - z_oracle);
    const bool ok = pole.eta_residual < 1e-10 && pole.z.imag() > -0.15 &&
                    pole.z.imag() < -0.05 && std::abs(pole.z.real() - 2.0) < 0.1 &&
                    dev < 1e-8 && elapsed < 1.0;
    report(1, "second-sheet pole", ok,
           fmt("residual %.1e, vs mueller %.1e, %.2fs", pole.eta_residual, dev,
               elapsed));
  }

  // 2 + 3 + 8a. Survival comparison on the full time window.
  scenario::ScenarioReport surv;
  {
    config::RunConfig cfg = config::preset("survival");
    surv = scenario::run_survival(cfg);
    const double fitted = surv.metric("fitted_decay_rate");
    const double gamma = surv.metric("decay_rate_pole");
    const double rate_err = std::abs(fitted - gamma) / gamma;
    const double rel_pos = surv.metric("max_rel_error_pos_window");
    report(2, "exponential decay (t > 0)", rate_err < 0.05 && rel_pos < 0.05,
           fmt("rate dev %.2f%%, max rel err %.2f%%", 100.0 * rate_err,
               100.0 * rel_pos));

    double mirror = 0.0;
    for (double t : {0.5, 2.0, 7.5, 15.0, 29.0})
      mirror = std::max(
          mirror,
          std::abs(std::abs(restriction::restricted_survival(pole, -t)) -
                   std::abs(restriction::restricted_survival(pole, t))));
    const double rel_neg = surv.metric("max_rel_error_neg_window");
    report(3, "time-symmetric regeneration", mirror < 1e-12 && rel_neg < 0.05,
           fmt("mirror asymmetry %.1e, max rel err %.2f%%", mirror,
               100.0 * rel_neg));
  }

  // 4. Emission snapshot: causal tail, in-cone agreement, front location.
  {
    config::RunConfig cfg = config::preset("emission");
    const scenario::ScenarioReport rep = scenario::run_emission(cfg);
    const double spacing = rep.metric("grid_spacing");
    const double tail = rep.metric("causal_tail_ratio");
    const double l2 = rep.metric("l2_rel_window");
    const double ft = rep.metric("front_total");
    const double fr = rep.metric("front_restr");
    const bool ok = tail < 1e-3 && l2 < 0.15 &&
                    std::abs(ft - cfg.t_fixed) <= spacing + 1e-12 &&
                    std::abs(fr - cfg.t_fixed) <= spacing + 1e-12;
    report(4, "emission profile at t = 10", ok,
           fmt("tail %.1e, L2 %.3f, fronts %.3g", tail, l2, ft) + "/" +
               fmt("%.3g", fr));
  }

  // 5. Two-point correlation snapshot: delta fronts, cone, window L2.
  {
    config::RunConfig cfg = config::preset("correlation");
    const scenario::ScenarioReport rep = scenario::run_correlation(cfg);
    const double spacing = rep.metric("grid_spacing");
    const double peaks = rep.metric("delta_peak_offset_max");
    const double ratio = rep.metric("front_ratio_restr");
    const double l2 = rep.metric("l2_rel_window_scaled");
    const bool ok =
        peaks <= spacing + 1e-12 && ratio > 10.0 && l2 < 0.25;
    report(5, "correlation at t = 30", ok,
           fmt("peak offset %.3g, front ratio %.1e, L2 %.3f", peaks, ratio,
               l2));
  }

  // 6 + 7. Projection suite, T restriction suite, continuation oracle.
  {
    const auto t0 = Clock::now();
    const selftest::Summary s = selftest::run(20260823);
    double hardy_worst = 0.0, pw_worst = 0.0;
    double t_worst = 0.0, collapse_worst = 0.0;
    bool hardy_pass = true, t_pass = true;
    for (const selftest::Check& c : s.checks) {
      const bool is_hardy = c.name.rfind("hardy", 0) == 0;
      const bool is_pw = c.name.find("paley-wiener") != std::string::npos;
      const bool is_collapse = c.name.find("collapse") != std::string::npos;
      if (is_hardy) {
        (is_pw ? pw_worst : hardy_worst) =
            std::max(is_pw ? pw_worst : hardy_worst, c.residual);
        hardy_pass = hardy_pass && c.pass;
      } else {
        (is_collapse ? collapse_worst : t_worst) =
            std::max(is_collapse ? collapse_worst : t_worst, c.residual);
        t_pass = t_pass && c.pass;
      }
    }

    // Continuation of a projected function at 20 complex points, against
    // composite Simpson over the same samples.
    const double omega_max = 40.0;
    const hardy::SampledFunction f = hardy::SampledFunction::sample(
        omega_max, 2048, [](double w) {
          const Complex d{w - 3.0, -1.5};
          // Gaussian window keeps the grid edge below the narrow-window
          // warning threshold.
          return std::exp(-w * w / 100.0) /
                 (d * d * (Complex{w, 0.0} + Complex{1.0, 2.0}));
        });
    const hardy::SampledFunction fm = hardy::project(f, hardy::Sign::minus);
    const Complex kI{0.0, 1.0};
    double eval_worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const Complex y{-18.0 + 2.0 * k, -1.0 - 0.15 * k};
      const Complex got = hardy::eval_complex(fm, hardy::Sign::minus, y);
      const Complex want =
          oracles::simpson_samples(
              [&](int j) { return fm.values[j] / (y - fm.omega(j)); },
              fm.size(), fm.spacing()) /
          (2.0 * kPi * kI);
      eval_worst = std::max(eval_worst, std::abs(got - want));
    }
    const double elapsed = seconds_since(t0);

    report(6, "half-plane projections",
           hardy_pass && eval_worst < 1e-6 && elapsed < 5.0,
           fmt("residual %.1e, PW %.1e, continuation %.1e", hardy_worst,
               pw_worst, eval_worst) + fmt(", %.2fs", elapsed));
    report(7, "restriction operators", t_pass,
           fmt("completeness/orthogonality %.1e, collapse %.1e", t_worst,
               collapse_worst));
  }

  // 8. Pade stepper: accuracy at the automatic dt, order, unitarity.
  {
    const double cn4_dev = surv.metric("cn4_max_dev");
    const double drift = surv.metric("cn4_norm_drift");

    const model::DiscreteModel dm =
        model::discretize(model::paper_params(), 12.0, 100);
    const evolution::Spectrum spec(dm);
    const evolution::State psi0 = evolution::make_discrete_state(dm);
    const evolution::State exact = spec.propagate(psi0, 2.0);
    const double d1 =
        (evolution::Cn4Stepper(dm, 0.02).propagate(psi0, 2.0) - exact)
            .cwiseAbs()
            .maxCoeff();
    const double d2 =
        (evolution::Cn4Stepper(dm, 0.01).propagate(psi0, 2.0) - exact)
            .cwiseAbs()
            .maxCoeff();
    const double ratio = d1 / d2;
    report(8, "time stepper vs spectral",
           cn4_dev < 1e-4 && ratio >= 8.0 && drift < 1e-12,
           fmt("dev %.1e, halving ratio %.1f, drift %.1e", cn4_dev, ratio,
               drift));
  }

  // 9. S-matrix unimodular on the real axis; resonant phase crossing.
  {
    double s_dev = 0.0;
    for (int k = 0; k <= 398; ++k) {
      const double w = 0.1 + k * (20.0 - 0.1) / 398.0;
      s_dev = std::max(s_dev, std::abs(std::abs(ls.s_matrix(w)) - 1.0));
    }
    // Bisection on Re eta+ (sign change brackets the resonance energy).
    double lo = 1.5, hi = 2.5;
    auto re_eta = [&](double w) {
      return ls.eta_boundary(w, spectral::Branch::plus).real();
    };
    double cross = 0.0;
    if (re_eta(lo) * re_eta(hi) < 0.0) {
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (re_eta(lo) * re_eta(mid) <= 0.0 ? hi : lo) = mid;
      }
      cross = 0.5 * (lo + hi);
    }
    const double off = std::abs(cross - pole.z.real());
    const bool ok =
        s_dev < 1e-8 && cross > 0.0 && off < 2.0 * std::abs(pole.z.imag());
    report(9, "scattering phase", ok,
           fmt("| |S|-1 | %.1e, crossing at %.4f (off %.3g)", s_dev, cross,
               off));
  }

  // 10. Width scaling: Im z quadratic in lambda, both poles from the
  // independent oracle only.
  {
    oracles::EtaOracle strong;
    oracles::EtaOracle weak;
    weak.lambda = 0.05;
    const double g1 = std::abs(strong.find_zero().imag());
    const double g2 = std::abs(weak.find_zero().imag());
    const double ratio = g2 / g1;
    report(10, "width scales as lambda^2", std::abs(ratio - 0.25) < 0.025,
           fmt("|Im z| ratio %.4f (expect 0.25)", ratio));
  }

  if (failures == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
