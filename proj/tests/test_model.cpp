#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "friedrichs/model.hpp"

using namespace friedrichs;
using Complex = std::complex<double>;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("parameter validation") {
  model::ModelParams p = model::paper_params();
  CHECK_NOTHROW(p.validate());
  p.lambda = 0.5;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = model::paper_params();
  p.omega1 = -1.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = model::paper_params();
  p.cutoff_M = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("form factor values and branch structure") {
  const model::ModelParams p = model::paper_params();

  // v(2)^2 = 2*2 / (1 + (2/5)^2)^2.
  const double want = 4.0 / (1.16 * 1.16);
  CHECK(std::abs(model::form_factor_sq(Complex{2.0, 0.0}, p) -
                 Complex{want, 0.0}) < 1e-14);
  CHECK(want == doctest::Approx(2.97265160523187).epsilon(1e-12));

  // squared form factor equals the square of the form factor off the cut,
  // on both sides of the axis.
  for (Complex w : {Complex{1.5, 0.7}, Complex{3.0, -2.0}, Complex{0.2, -0.01}}) {
    const Complex v = model::form_factor(w, p);
    CHECK(std::abs(v * v - model::form_factor_sq(w, p)) < 1e-13);
  }

  CHECK_THROWS_AS(model::form_factor(Complex{-1.0, 0.0}, p),
                  std::domain_error);
  CHECK_THROWS_AS(model::form_factor(Complex{0.0, 5.0}, p), std::domain_error);
  CHECK_THROWS_AS(model::form_factor(Complex{0.0, -5.0}, p),
                  std::domain_error);
}

TEST_CASE("box discretization matches the continuum coupling density") {
  const model::ModelParams p = model::paper_params();
  const model::DiscreteModel dm = model::discretize(p, 10.0, 100);
  REQUIRE(dm.n_modes == 100);
  REQUIRE(dm.omega_grid.size() == 100);

  for (int n = 1; n <= dm.n_modes; ++n) {
    const double w = 2.0 * kPi * n / dm.box_L;
    CHECK(dm.omega_grid[n - 1] == doctest::Approx(w).epsilon(1e-14));
    // V_n^2 = (2 pi / L) v(w_n)^2: mode spacing times the spectral density.
    const double vsq =
        model::form_factor_sq(Complex{w, 0.0}, p).real();
    CHECK(dm.coupling[n - 1] * dm.coupling[n - 1] ==
          doctest::Approx(2.0 * kPi / dm.box_L * vsq).epsilon(1e-12));
  }
}

TEST_CASE("hamiltonian is a symmetric arrowhead") {
  const model::DiscreteModel dm =
      model::discretize(model::paper_params(), 5.0, 40);
  const model::HermitianMatrix h = model::assemble_hamiltonian(dm);
  REQUIRE(h.dim() == 41);
  CHECK(h.entries(0, 0) == dm.params.omega1);
  for (int i = 1; i < h.dim(); ++i) {
    CHECK(h.entries(i, i) == doctest::Approx(dm.omega_grid[i - 1]));
    CHECK(h.entries(0, i) ==
          doctest::Approx(dm.params.lambda * dm.coupling[i - 1]));
    CHECK(h.entries(i, 0) == h.entries(0, i));
    for (int j = 1; j < h.dim(); ++j)
      if (i != j) CHECK(h.entries(i, j) == 0.0);
  }
}

TEST_CASE("position overlap") {
  const model::DiscreteModel dm =
      model::discretize(model::paper_params(), 10.0, 80);
  const double w3 = dm.omega_grid[2];
  CHECK(model::position_overlap(dm, 3, 3.5) ==
        doctest::Approx(std::sqrt(2.0 / 10.0) * std::cos(w3 * 3.5)));
  CHECK(model::position_overlap(dm, 1, -2.0) ==
        model::position_overlap(dm, 1, 2.0));
  CHECK_THROWS_AS(model::position_overlap(dm, 1, 5.1), std::out_of_range);
  CHECK_THROWS_AS(model::position_overlap(dm, 0, 1.0), std::out_of_range);
  CHECK_THROWS_AS(model::position_overlap(dm, 81, 1.0), std::out_of_range);
}

TEST_CASE("paper preset dimensions") {
  const model::DiscreteModel dm = model::paper_preset();
  CHECK(dm.box_L == 100.0);
  CHECK(dm.n_modes == 1200);
  CHECK(dm.dim() == 1201);
  CHECK(dm.params.omega1 == 2.0);
  CHECK(dm.params.lambda == 0.1);
  CHECK(dm.params.cutoff_M == 5.0);
}
