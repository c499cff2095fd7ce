#include "friedrichs/selftest.hpp"

#include <cmath>
#include <complex>
#include <initializer_list>
#include <numbers>
#include <random>
#include <sstream>
#include <utility>

#include "friedrichs/hardy.hpp"
#include "friedrichs/model.hpp"
#include "friedrichs/restriction.hpp"

namespace friedrichs::selftest {

namespace {

using Complex = std::complex<double>;
using hardy::SampledFunction;
using hardy::Sign;

constexpr double kPi = std::numbers::pi;
constexpr double kOmegaMax = 40.0;
constexpr int kGrid = 2048;

double diff_norm(const SampledFunction& a, const SampledFunction& b) {
  double s = 0.0;
  for (int k = 0; k < a.size(); ++k) s += std::norm(a.values[k] - b.values[k]);
  return std::sqrt(s * a.spacing());
}

SampledFunction conjugate(const SampledFunction& f) {
  SampledFunction out = f;
  for (Complex& v : out.values) v = std::conj(v);
  return out;
}

std::vector<SampledFunction> make_corpus(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> center(-10.0, 10.0);
  std::uniform_real_distribution<double> width(1.0, 3.0);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_int_distribution<int> degree(0, 2);

  std::vector<SampledFunction> corpus;
  corpus.push_back(SampledFunction::sample(
      kOmegaMax, kGrid, [](double) { return Complex{0.0, 0.0}; }, "zero"));
  for (int i = 1; i < 20; ++i) {
    const double mu = center(rng), sig = width(rng);
    const Complex c{coeff(rng), coeff(rng)};
    const int deg = degree(rng);
    corpus.push_back(SampledFunction::sample(
        kOmegaMax, kGrid,
        [=](double w) {
          const double u = (w - mu) / sig;
          return c * std::pow(u, deg) * std::exp(-0.5 * u * u);
        },
        "corpus-" + std::to_string(i)));
  }
  return corpus;
}

void add(Summary& s, const std::string& name, double residual, double tol) {
  s.checks.push_back({name, residual, tol, residual < tol});
}

void hardy_suite(Summary& s, unsigned seed) {
  const auto corpus = make_corpus(seed);
  double comp = 0.0, idem = 0.0, orth = 0.0, conj = 0.0, pw = 0.0;
  double zero_total = 0.0;
  for (const SampledFunction& f : corpus) {
    const hardy::HardyPair pair = hardy::decompose(f);
    const double scale = std::max(f.norm2(), 1.0);
    comp = std::max(comp, pair.recon_residual);
    for (Sign sign : {Sign::plus, Sign::minus}) {
      const SampledFunction& part =
          sign == Sign::plus ? pair.plus : pair.minus;
      idem = std::max(idem,
                      diff_norm(hardy::project(part, sign), part) / scale);
      const Sign other = sign == Sign::plus ? Sign::minus : Sign::plus;
      orth = std::max(orth, hardy::project(part, other).norm2() / scale);
      pw = std::max(pw, hardy::paley_wiener_residual(part, sign) *
                            (part.norm2() > 0.0 ? 1.0 : 0.0));
    }
    conj = std::max(conj, diff_norm(conjugate(pair.plus),
                                    hardy::project(conjugate(f), Sign::minus)) /
                              scale);
    if (f.label == "zero")
      zero_total = pair.recon_residual + pair.plus.norm2() + pair.minus.norm2();
  }
  add(s, "hardy completeness (corpus max)", comp, 1e-8);
  add(s, "hardy idempotence (corpus max)", idem, 1e-8);
  add(s, "hardy orthogonality (corpus max)", orth, 1e-8);
  add(s, "hardy conjugation (corpus max)", conj, 1e-8);
  add(s, "hardy paley-wiener (corpus max)", pw, 1e-6);
  add(s, "hardy zero-function residuals", zero_total, 1e-300);
}

void restriction_suite(Summary& s) {
  using restriction::PoleSide;
  using restriction::RestrictionCase;
  using Tag = RestrictionCase::Tag;

  const model::ModelParams p = model::paper_params();
  const SampledFunction theta_b = SampledFunction::sample(
      kOmegaMax, kGrid,
      [&](double w) -> Complex {
        if (w < 0.0) return 0.0;
        const double weight = w == 0.0 ? 0.5 : 1.0;
        return weight * p.lambda *
               model::form_factor(Complex{w, 0.0}, p).real() *
               std::exp(-0.5 * w);
      },
      "theta-b");
  const SampledFunction f = SampledFunction::sample(
      kOmegaMax, kGrid,
      [](double w) { return std::exp(-0.125 * (w - 6.0) * (w - 6.0)); }, "f");
  const SampledFunction g = SampledFunction::sample(
      kOmegaMax, kGrid,
      [](double w) {
        return Complex{w, 1.0} * std::exp(-0.1 * (w - 4.0) * (w - 4.0));
      },
      "g");

  const char* tag_names[] = {"e", "e[bf]", "e[bg]", "[bf]e[bg]"};
  const Tag tags[] = {Tag::e_only, Tag::e_bracket_f, Tag::e_bracket_g,
                      Tag::double_bracket};
  for (PoleSide side : {PoleSide::lower, PoleSide::upper}) {
    const char* side_name = side == PoleSide::lower ? "z" : "z.cc";
    const double t = side == PoleSide::lower ? 2.0 : -2.0;
    double comp = 0.0, orth = 0.0;
    for (int k = 0; k < 4; ++k) {
      RestrictionCase c;
      c.tag = tags[k];
      c.t = t;
      c.f = f;
      c.g = g;
      c.system_b = theta_b;
      const SampledFunction value = restriction::case_value(c, side);
      const auto main = restriction::t_restrict(c, side,
                                                side == PoleSide::lower
                                                    ? Sign::minus
                                                    : Sign::plus);
      const auto complement = restriction::t_restrict(
          c, side,
          side == PoleSide::lower ? Sign::plus : Sign::minus);
      SampledFunction sum = main.sum;
      for (int j = 0; j < sum.size(); ++j)
        sum.values[j] += complement.sum.values[j];
      const double den = std::max(value.norm2(), 1.0);
      comp = std::max(comp, diff_norm(sum, value) / den);
      orth = std::max(orth, restriction::t_orthogonality_residual(c, side));
      (void)tag_names;
    }
    std::ostringstream prefix;
    prefix << "t-restriction (" << side_name << " pole, 4 cases)";
    add(s, prefix.str() + " completeness", comp, 1e-8);
    add(s, prefix.str() + " orthogonality", orth, 1e-8);
  }

  // Collapse: every constituent one-sided, the complement must vanish.
  // The test functions are finite exponential sums with grid-aligned decay
  // times, so they lie in the grid Hardy class exactly (single FFT bins, no
  // truncation leakage), and t is a grid multiple so multiplication by
  // e^{-i w t} is an exact circular shift.
  const double dt_bin = kPi / kOmegaMax;
  auto exp_sum = [&](std::initializer_list<std::pair<Complex, int>> parts,
                     double sgn, const char* label) {
    SampledFunction out = SampledFunction::sample(
        kOmegaMax, kGrid,
        [&](double w) {
          Complex v{0.0, 0.0};
          for (const auto& [c, j] : parts)
            v += c * std::exp(Complex{0.0, -sgn * j * dt_bin * w});
          return v;
        },
        label);
    out.one_sided = true;
    return out;
  };
  for (PoleSide side : {PoleSide::lower, PoleSide::upper}) {
    const double sgn = side == PoleSide::lower ? 1.0 : -1.0;
    RestrictionCase c;
    c.tag = Tag::double_bracket;
    c.t = sgn * 32.0 * dt_bin;
    c.system_b = theta_b;
    c.f = exp_sum({{Complex{1.0, 0.3}, 10}, {Complex{-0.4, 0.8}, 17},
                   {Complex{0.2, -0.5}, 23}},
                  sgn, "f-oneside");
    c.g = exp_sum({{Complex{0.7, -0.2}, 5}, {Complex{0.1, 0.9}, 12},
                   {Complex{-0.6, 0.4}, 29}},
                  sgn, "g-oneside");
    add(s,
        side == PoleSide::lower ? "t-restriction collapse (z pole)"
                                : "t-restriction collapse (z.cc pole)",
        restriction::t_collapse_residual(c, side), 1e-8);
  }
}

}  // namespace

bool Summary::all_pass() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

Summary run(unsigned seed) {
  Summary s;
  hardy_suite(s, seed);
  restriction_suite(s);
  return s;
}

std::string table(const Summary& s) {
  std::ostringstream os;
  os << "check                                              residual      "
        "tolerance  status\n";
  for (const Check& c : s.checks) {
    std::ostringstream name;
    name << c.name;
    std::string n = name.str();
    n.resize(50, ' ');
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%-13.3e %-10.0e %s", c.residual,
                  c.tolerance, c.pass ? "pass" : "FAIL");
    os << n << ' ' << buf << '\n';
  }
  os << (s.all_pass() ? "all checks passed\n" : "FAILURES present\n");
  return os.str();
}

}  // namespace friedrichs::selftest
