#include "friedrichs/restriction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "friedrichs/quadrature.hpp"

namespace friedrichs::restriction {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};
constexpr double kSlopeTol = 1e-12;

double theta(double t) { return t > 0.0 ? 1.0 : (t < 0.0 ? 0.0 : 0.5); }

}  // namespace

ExpSum ExpSum::exponential(Complex c, double a) {
  ExpSum s;
  s.terms.push_back({c, a});
  return s;
}

ExpSum ExpSum::cosine(double x, double norm) {
  ExpSum s;
  const Complex half{0.5 / norm, 0.0};
  s.terms.push_back({half, std::abs(x)});
  s.terms.push_back({half, -std::abs(x)});
  return s;
}

ExpSum ExpSum::operator*(const ExpSum& other) const {
  ExpSum out;
  for (const Term& p : terms)
    for (const Term& q : other.terms) {
      const double a = p.a + q.a;
      const Complex c = p.c * q.c;
      bool merged = false;
      for (Term& r : out.terms)
        if (std::abs(r.a - a) < kSlopeTol) {
          r.c += c;
          merged = true;
          break;
        }
      if (!merged) out.terms.push_back({c, a});
    }
  return out;
}

ExpSum ExpSum::hardy_part(hardy::Sign sign) const {
  ExpSum out;
  for (const Term& p : terms) {
    double w;
    if (std::abs(p.a) < kSlopeTol)
      w = 0.5;
    else if (sign == hardy::Sign::minus)
      w = p.a > 0.0 ? 1.0 : 0.0;
    else
      w = p.a < 0.0 ? 1.0 : 0.0;
    if (w != 0.0) out.terms.push_back({w * p.c, p.a});
  }
  return out;
}

Complex ExpSum::eval(Complex z) const {
  Complex sum{0.0, 0.0};
  for (const Term& p : terms) sum += p.c * std::exp(-kI * p.a * z);
  return sum;
}

Complex k_kernel(const spectral::LevelShift& ls, Complex z, double x) {
  const model::ModelParams& p = ls.params();
  auto f = [&](double w) -> Complex {
    return model::form_factor(Complex{w, 0.0}, p) * std::cos(w * x) /
           (std::sqrt(kPi) * (z - w));
  };
  quad::Options opt;
  opt.max_panel = kPi / (4.0 * std::max(std::abs(x), 1.0));
  // The form factor has a sqrt(w) branch point at the spectral threshold.
  Complex sum = quad::integrate_sqrt_origin(f, p.cutoff_M, opt);
  const double pts[] = {p.cutoff_M, 4.0 * p.cutoff_M, ls.omega_max()};
  for (int k = 0; k + 1 < 3; ++k)
    sum += quad::integrate(f, pts[k], pts[k + 1], opt);
  return sum / (2.0 * kPi * kI);
}

Complex restricted_survival(const spectral::ResonancePole& pole, double t) {
  return theta(t) * pole.residue_N * std::exp(-kI * pole.z * t) +
         theta(-t) * std::conj(pole.residue_N) *
             std::exp(-kI * pole.z_cc * t);
}

Complex restricted_emission(const spectral::LevelShift& ls,
                            const spectral::ResonancePole& pole, double t,
                            double x) {
  if (!(t > 0.0))
    throw std::domain_error("restricted_emission: requires t > 0");
  const model::ModelParams& p = ls.params();
  const Complex z = pole.z;
  const Complex vz = model::form_factor(z, p);
  const ExpSum fe = ExpSum::cosine(x, std::sqrt(kPi)) *
                    ExpSum::exponential(1.0, t);
  const Complex bracket = fe.hardy_part(hardy::Sign::minus).eval(z);
  return -2.0 * kPi * kI * pole.residue_N * p.lambda *
         (vz * bracket - std::exp(-kI * z * t) * k_kernel(ls, z, x));
}

Complex restricted_correlation(const spectral::LevelShift& ls,
                               const spectral::ResonancePole& pole, double t,
                               double x1, double x2) {
  if (!(t > 0.0))
    throw std::domain_error("restricted_correlation: requires t > 0");
  const model::ModelParams& p = ls.params();
  const Complex z = pole.z;
  const Complex lvz = p.lambda * model::form_factor(z, p);
  const Complex lk1 = p.lambda * k_kernel(ls, z, x1);
  const Complex lk2 = p.lambda * k_kernel(ls, z, x2);

  const ExpSum f = ExpSum::cosine(x1, std::sqrt(kPi));
  const ExpSum g = ExpSum::cosine(x2, std::sqrt(kPi));
  const ExpSum e = ExpSum::exponential(1.0, t);
  const auto minus = hardy::Sign::minus;
  const auto plus = hardy::Sign::plus;

  const Complex t1 = lvz * lvz * (f * e * g).hardy_part(minus).eval(z);
  const Complex t2 =
      -lvz * lvz * ((f * e).hardy_part(plus) * g).hardy_part(minus).eval(z);
  const Complex t3 = -lvz * (f * e).hardy_part(minus).eval(z) * lk2;
  const Complex t4 =
      -lvz * lvz * (f * (e * g).hardy_part(plus)).hardy_part(minus).eval(z);
  const Complex t5 = -lk1 * lvz * (e * g).hardy_part(minus).eval(z);
  const Complex t6 = lk1 * std::exp(-kI * z * t) * lk2;

  return -4.0 * kPi * kPi * pole.residue_N * (t1 + t2 + t3 + t4 + t5 + t6);
}

FreeFieldCorrelation free_field_correlation(double t, double x1, double x2,
                                            double omega_max) {
  FreeFieldCorrelation out;
  out.delta_positions = {x2 + t, -x2 + t, x2 - t, -x2 - t};
  auto smooth_at = [&](double cutoff) -> Complex {
    auto f = [&](double w) -> Complex {
      return std::cos(w * x1) * std::sin(w * t) * std::cos(w * x2);
    };
    quad::Options opt;
    opt.max_panel =
        kPi / (4.0 * std::max({std::abs(t), std::abs(x1), std::abs(x2), 1.0}));
    return -kI / kPi * quad::integrate(f, 0.0, cutoff, opt);
  };
  out.smooth = smooth_at(omega_max);
  out.cutoff_sensitivity = std::abs(out.smooth - smooth_at(0.9 * omega_max));
  return out;
}

// ---- grid operators ----

namespace {

using hardy::SampledFunction;
using hardy::Sign;

Sign flip(Sign s) { return s == Sign::minus ? Sign::plus : Sign::minus; }

void check_compatible(const SampledFunction& a, const SampledFunction& b) {
  if (a.size() != b.size() || a.omega_max != b.omega_max)
    throw std::invalid_argument("restriction: grid mismatch");
}

SampledFunction product(const SampledFunction& a, const SampledFunction& b) {
  check_compatible(a, b);
  SampledFunction out = a;
  out.one_sided = a.one_sided || b.one_sided;
  for (int k = 0; k < out.size(); ++k) out.values[k] *= b.values[k];
  return out;
}

SampledFunction scaled(SampledFunction a, Complex c) {
  for (Complex& v : a.values) v *= c;
  return a;
}

SampledFunction add(const SampledFunction& a, const SampledFunction& b) {
  check_compatible(a, b);
  SampledFunction out = a;
  for (int k = 0; k < out.size(); ++k) out.values[k] += b.values[k];
  return out;
}

// e^{-i w t} on the grid, whole or its analytic Hardy part.
SampledFunction e_grid(const SampledFunction& like, double t) {
  SampledFunction out;
  out.omega_max = like.omega_max;
  out.values.resize(like.size());
  for (int k = 0; k < out.size(); ++k)
    out.values[k] = std::exp(-kI * like.omega(k) * t);
  return out;
}

// [e]^- = Theta(t) e, [e]^+ = Theta(-t) e (distributional rule).
SampledFunction e_part(const SampledFunction& like, double t, Sign sign) {
  const double w = sign == Sign::minus ? theta(t) : theta(-t);
  return scaled(e_grid(like, t), w);
}

}  // namespace

void RestrictionCase::validate() const {
  const bool needs_f =
      tag == Tag::e_bracket_f || tag == Tag::double_bracket;
  const bool needs_g =
      tag == Tag::e_bracket_g || tag == Tag::double_bracket;
  if (system_b.values.empty())
    throw std::invalid_argument(
        "RestrictionCase: missing system factor (also fixes the grid)");
  if (needs_f && f.values.empty())
    throw std::invalid_argument("RestrictionCase: missing f");
  if (needs_g && g.values.empty())
    throw std::invalid_argument("RestrictionCase: missing g");
  if (needs_f) check_compatible(f, system_b);
  if (needs_g) check_compatible(g, system_b);
}

hardy::SampledFunction case_value(const RestrictionCase& c, PoleSide side) {
  c.validate();
  // The case brackets carry the sign opposite to the pole's Hardy class.
  const Sign s = side == PoleSide::lower ? Sign::minus : Sign::plus;
  const Sign o = flip(s);
  using Tag = RestrictionCase::Tag;
  switch (c.tag) {
    case Tag::e_only:
      return e_grid(c.system_b, c.t);
    case Tag::e_bracket_f:
      return product(e_grid(c.system_b, c.t),
                     hardy::project(product(c.system_b, c.f), o));
    case Tag::e_bracket_g:
      return product(e_grid(c.system_b, c.t),
                     hardy::project(product(c.system_b, c.g), o));
    case Tag::double_bracket:
      return product(
          product(hardy::project(product(c.system_b, c.f), o),
                  e_grid(c.system_b, c.t)),
          hardy::project(product(c.system_b, c.g), o));
  }
  throw std::logic_error("case_value: bad tag");
}

GridRestriction t_restrict(const RestrictionCase& c, PoleSide side,
                           hardy::Sign sign) {
  c.validate();
  const Sign s = side == PoleSide::lower ? Sign::minus : Sign::plus;
  const Sign o = flip(s);
  const bool main = sign == s;
  using Tag = RestrictionCase::Tag;

  GridRestriction out;
  const SampledFunction& bf = c.system_b;
  auto es = [&](const SampledFunction& like) { return e_part(like, c.t, s); };
  auto eo = [&](const SampledFunction& like) { return e_part(like, c.t, o); };
  auto pr = [&](const SampledFunction& x, Sign sg) {
    return hardy::project(x, sg);
  };

  switch (c.tag) {
    case Tag::e_only: {
      out.terms.push_back(main ? es(bf) : eo(bf));
      break;
    }
    case Tag::e_bracket_f:
    case Tag::e_bracket_g: {
      const SampledFunction& tf = c.tag == Tag::e_bracket_f ? c.f : c.g;
      if (main) {
        out.terms.push_back(product(bf, pr(product(es(bf), tf), s)));
        out.terms.push_back(
            scaled(product(es(bf), pr(product(bf, tf), s)), -1.0));
      } else {
        out.terms.push_back(product(eo(bf), pr(product(bf, tf), o)));
        out.terms.push_back(product(bf, pr(product(es(bf), tf), o)));
      }
      break;
    }
    case Tag::double_bracket: {
      const SampledFunction bb = product(bf, bf);
      const SampledFunction fe = product(c.f, es(bf));
      const SampledFunction eg = product(es(bf), c.g);
      const SampledFunction feg = product(fe, c.g);
      const SampledFunction pbf = pr(product(bf, c.f), main ? s : o);
      const SampledFunction pbg = pr(product(bf, c.g), main ? s : o);
      if (main) {
        out.terms.push_back(product(bb, pr(feg, s)));
        out.terms.push_back(
            scaled(product(bb, pr(product(pr(fe, o), c.g), s)), -1.0));
        out.terms.push_back(scaled(product(bf, product(pr(fe, s), pbg)), -1.0));
        out.terms.push_back(
            scaled(product(bb, pr(product(c.f, pr(eg, o)), s)), -1.0));
        out.terms.push_back(scaled(product(bf, product(pbf, pr(eg, s))), -1.0));
        out.terms.push_back(product(product(pbf, es(bf)), pbg));
      } else {
        out.terms.push_back(product(product(pbf, eo(bf)), pbg));
        out.terms.push_back(product(bb, pr(feg, o)));
        out.terms.push_back(
            scaled(product(bb, pr(product(pr(fe, o), c.g), o)), -1.0));
        out.terms.push_back(product(bf, product(pr(fe, o), pbg)));
        out.terms.push_back(
            scaled(product(bb, pr(product(pr(eg, o), c.f), o)), -1.0));
        out.terms.push_back(product(bf, product(pr(eg, o), pbf)));
      }
      break;
    }
  }

  out.sum = out.terms.front();
  for (size_t k = 1; k < out.terms.size(); ++k)
    out.sum = add(out.sum, out.terms[k]);
  return out;
}

double t_orthogonality_residual(const RestrictionCase& c, PoleSide side) {
  c.validate();
  const Sign s = side == PoleSide::lower ? Sign::minus : Sign::plus;
  const Sign o = flip(s);
  using Tag = RestrictionCase::Tag;

  // The complement operator annihilates the main-part terms term by term:
  // terms ending in a single [.]^s bracket are re-masked with the opposite
  // sign (exact zero up to FFT roundoff); terms carrying e^s or a product
  // of two s-brackets are assigned wholly to the main part by construction
  // and contribute nothing. The residual is what the re-masking leaves.
  double worst = 0.0;
  auto remask = [&](const SampledFunction& already_s) {
    const SampledFunction leak = hardy::project(already_s, o);
    const double den = std::max(already_s.norm2(), 1e-300);
    worst = std::max(worst, leak.norm2() / den);
  };

  const SampledFunction& bf = c.system_b;
  auto es = [&](const SampledFunction& like) { return e_part(like, c.t, s); };
  switch (c.tag) {
    case Tag::e_only:
      break;  // [e]^s has no opposite part by the analytic rule
    case Tag::e_bracket_f:
    case Tag::e_bracket_g: {
      const SampledFunction& tf = c.tag == Tag::e_bracket_f ? c.f : c.g;
      remask(hardy::project(product(es(bf), tf), s));
      break;
    }
    case Tag::double_bracket: {
      const SampledFunction fe = product(c.f, es(bf));
      const SampledFunction eg = product(es(bf), c.g);
      remask(hardy::project(product(fe, c.g), s));
      remask(hardy::project(product(hardy::project(fe, o), c.g), s));
      remask(hardy::project(product(c.f, hardy::project(eg, o)), s));
      break;
    }
  }
  return worst;
}

double t_collapse_residual(const RestrictionCase& c, PoleSide side) {
  if (c.tag != RestrictionCase::Tag::double_bracket)
    throw std::invalid_argument(
        "t_collapse_residual: double_bracket case only");
  const SampledFunction value = case_value(c, side);
  const Sign s = side == PoleSide::lower ? Sign::minus : Sign::plus;
  const GridRestriction main = t_restrict(c, side, s);
  const GridRestriction comp = t_restrict(c, side, flip(s));
  const double den = std::max(value.norm2(), 1e-300);
  double worst = comp.sum.norm2() / den;
  SampledFunction diff = main.sum;
  for (int k = 0; k < diff.size(); ++k) diff.values[k] -= value.values[k];
  worst = std::max(worst, diff.norm2() / den);
  return worst;
}

}  // namespace friedrichs::restriction
