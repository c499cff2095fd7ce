#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "friedrichs/restriction.hpp"
#include "oracles.hpp"

using namespace friedrichs;
using Complex = std::complex<double>;
using restriction::ExpSum;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

spectral::LevelShift paper_ls() {
  return spectral::LevelShift(model::paper_params());
}

}  // namespace

TEST_CASE("exponential-sum algebra") {
  // cos(w x)/sqrt(pi) * e^{-i w t} -> two terms at slopes t +- |x|.
  const ExpSum fe =
      ExpSum::cosine(3.0, std::sqrt(kPi)) * ExpSum::exponential(1.0, 10.0);
  REQUIRE(fe.terms.size() == 2);

  const Complex z{2.0, -0.1};
  const Complex direct = std::cos(3.0 * z) / std::sqrt(kPi) *
                         std::exp(-kI * z * 10.0);
  CHECK(std::abs(fe.eval(z) - direct) < 1e-13);

  // Slopes 7 and 13 are both positive: entirely in the minus class.
  CHECK(fe.hardy_part(hardy::Sign::minus).terms.size() == 2);
  CHECK(fe.hardy_part(hardy::Sign::plus).terms.empty());

  // t = |x|: one slope hits zero and splits half/half.
  const ExpSum edge =
      ExpSum::cosine(10.0, 1.0) * ExpSum::exponential(1.0, 10.0);
  const auto minus = edge.hardy_part(hardy::Sign::minus);
  const auto plus = edge.hardy_part(hardy::Sign::plus);
  REQUIRE(minus.terms.size() == 2);
  REQUIRE(plus.terms.size() == 1);
  CHECK(std::abs(plus.terms[0].c - Complex{0.25, 0.0}) < 1e-15);

  // Equal slopes merge.
  const ExpSum sq = ExpSum::cosine(2.0, 1.0) * ExpSum::cosine(2.0, 1.0);
  CHECK(sq.terms.size() == 3);  // slopes -4, 0, +4
}

TEST_CASE("restricted survival amplitude") {
  const spectral::LevelShift ls = paper_ls();
  const spectral::ResonancePole pole = spectral::find_pole(ls);

  const Complex at5 = restriction::restricted_survival(pole, 5.0);
  CHECK(std::abs(at5 - pole.residue_N * std::exp(-kI * pole.z * 5.0)) <
        1e-14);

  // Mirror symmetry |A(-t)| = |A(t)| and the half/half value at t = 0.
  for (double t : {0.5, 3.0, 17.0})
    CHECK(std::abs(restriction::restricted_survival(pole, -t)) ==
          doctest::Approx(std::abs(restriction::restricted_survival(pole, t)))
              .epsilon(1e-13));
  CHECK(std::abs(restriction::restricted_survival(pole, 0.0) -
                 Complex{pole.residue_N.real(), 0.0}) < 1e-14);
}

TEST_CASE("continuation kernel against the simpson oracle") {
  const spectral::LevelShift ls = paper_ls();
  const model::ModelParams p = model::paper_params();
  const Complex z{1.93, -0.096};
  for (double x : {0.0, 2.5, 12.0}) {
    // Same integrand, independent rule, sqrt removed by w = u^2.
    const Complex integral = oracles::simpson(
        [&](double u) -> Complex {
          const double w = u * u;
          if (w == 0.0) return {0.0, 0.0};
          return 2.0 * u * model::form_factor(Complex{w, 0.0}, p) *
                 std::cos(w * x) / (std::sqrt(kPi) * (z - w));
        },
        0.0, std::sqrt(ls.omega_max()), 1e-13);
    const Complex want = integral / (2.0 * kPi * kI);
    CHECK(std::abs(restriction::k_kernel(ls, z, x) - want) < 1e-9);
  }
}

TEST_CASE("restricted emission: structure and causal front") {
  const spectral::LevelShift ls = paper_ls();
  const spectral::ResonancePole pole = spectral::find_pole(ls);
  const model::ModelParams p = model::paper_params();
  const double t = 10.0;

  SUBCASE("matches a from-scratch evaluation of the same closed form") {
    const double x = 4.0;
    const Complex z = pole.z;
    const Complex vz = model::form_factor(z, p);
    const Complex bracket =
        (std::exp(-kI * z * (t - x)) + std::exp(-kI * z * (t + x))) /
        (2.0 * std::sqrt(kPi));
    const Complex want =
        -2.0 * kPi * kI * pole.residue_N * p.lambda *
        (vz * bracket -
         std::exp(-kI * z * t) * restriction::k_kernel(ls, z, x));
    CHECK(std::abs(restriction::restricted_emission(ls, pole, t, x) - want) <
          1e-12);
  }

  SUBCASE("even in x, sharp drop across |x| = t") {
    CHECK(std::abs(restriction::restricted_emission(ls, pole, t, 6.0) -
                   restriction::restricted_emission(ls, pole, t, -6.0)) <
          1e-13);
    const double inside = std::abs(restriction::restricted_emission(
        ls, pole, t, t - 0.5));
    const double outside = std::abs(restriction::restricted_emission(
        ls, pole, t, t + 0.5));
    CHECK(inside > 3.0 * outside);
  }

  SUBCASE("requires positive time") {
    CHECK_THROWS_AS(restriction::restricted_emission(ls, pole, -1.0, 2.0),
                    std::domain_error);
  }
}

TEST_CASE("free-field correlation against the closed form") {
  const double t = 30.0, x1 = 7.0, x2 = 15.0, omega_max = 60.0;
  const auto got = restriction::free_field_correlation(t, x1, x2, omega_max);

  CHECK(got.delta_positions[0] == doctest::Approx(x2 + t));
  CHECK(got.delta_positions[1] == doctest::Approx(-x2 + t));
  CHECK(got.delta_positions[2] == doctest::Approx(x2 - t));
  CHECK(got.delta_positions[3] == doctest::Approx(-x2 - t));
  CHECK(got.delta_weight == doctest::Approx(0.25));

  // cos(a w) sin(t w) cos(c w) expands into four shifted sines, each of
  // which integrates to (1 - cos(Omega (t+s)))/(t+s).
  Complex want{0.0, 0.0};
  for (double s : {x1 + x2, x1 - x2, -x1 + x2, -x1 - x2})
    want += -kI / kPi * 0.25 *
            (1.0 - std::cos(omega_max * (t + s))) / (t + s);
  CHECK(std::abs(got.smooth - want) < 1e-10);
  CHECK(got.cutoff_sensitivity >= 0.0);
}

TEST_CASE("restricted correlation symmetries") {
  const spectral::LevelShift ls = paper_ls();
  const spectral::ResonancePole pole = spectral::find_pole(ls);
  const double t = 30.0;

  // Even in each position and symmetric under x1 <-> x2.
  const Complex a = restriction::restricted_correlation(ls, pole, t, 7.0, 15.0);
  CHECK(std::abs(a - restriction::restricted_correlation(ls, pole, t, -7.0,
                                                         15.0)) < 1e-12);
  CHECK(std::abs(a - restriction::restricted_correlation(ls, pole, t, 15.0,
                                                         7.0)) < 1e-12);

  // Sharp front of the pole part across |x1| = t - x2.
  const double inside =
      std::abs(restriction::restricted_correlation(ls, pole, t, 14.0, 15.0));
  const double outside =
      std::abs(restriction::restricted_correlation(ls, pole, t, 16.0, 15.0));
  CHECK(inside > 10.0 * outside);

  CHECK_THROWS_AS(restriction::restricted_correlation(ls, pole, 0.0, 1.0, 2.0),
                  std::domain_error);
}

TEST_CASE("grid restriction cases validate their inputs") {
  restriction::RestrictionCase c;
  c.tag = restriction::RestrictionCase::Tag::double_bracket;
  c.t = 1.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);  // nothing set

  c.system_b = hardy::SampledFunction::sample(
      20.0, 256, [](double w) { return w > 0.0 ? std::exp(-w) : 0.0; });
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);  // f, g missing

  c.f = hardy::SampledFunction::sample(
      20.0, 256, [](double w) { return std::exp(-w * w); });
  c.g = hardy::SampledFunction::sample(
      20.0, 128, [](double w) { return std::exp(-w * w); });
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);  // grid mismatch

  c.g = c.f;
  CHECK_NOTHROW(c.validate());

  CHECK_THROWS_AS(
      restriction::t_collapse_residual(
          restriction::RestrictionCase{}, restriction::PoleSide::lower),
      std::invalid_argument);
}
