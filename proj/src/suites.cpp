#include "rocbounds/suites.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rocbounds/bounds.hpp"
#include "rocbounds/roc.hpp"
#include "rocbounds/verify.hpp"

namespace rocbounds {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

SuiteCase make_case(const std::string& name, double observed, double limit,
                    std::string detail = {}) {
  SuiteCase c;
  c.name = name;
  c.observed = observed;
  c.limit = limit;
  c.pass = observed <= limit;
  c.detail = std::move(detail);
  return c;
}

void finalize(SuiteResult& r) {
  r.pass = std::all_of(r.cases.begin(), r.cases.end(),
                       [](const SuiteCase& c) { return c.pass; });
}

IntervalSet random_interval_set(std::mt19937_64& rng) {
  const int pieces = 1 + static_cast<int>(uniform01(rng) * 3.0);
  std::vector<double> endpoints;
  for (int i = 0; i < 2 * pieces; ++i)
    endpoints.push_back(uniform_in(rng, -5.0, 5.0));
  std::sort(endpoints.begin(), endpoints.end());
  std::vector<std::pair<double, double>> ivals;
  for (int i = 0; i < pieces; ++i) {
    const double lo = endpoints[2 * i], hi = endpoints[2 * i + 1];
    if (hi - lo > 1e-9) ivals.push_back({lo, hi});
  }
  if (ivals.empty()) ivals.push_back({0.0, 1.0});
  return IntervalSet::from(std::move(ivals));
}

}  // namespace

ExtremalDistribution random_symmetric_bounded(std::mt19937_64& rng, double b) {
  const int pairs = static_cast<int>(uniform01(rng) * 2.0);  // 0 or 1 mirrored pair
  std::vector<double> knots;
  for (int i = 0; i < 1 + 2 * pairs; ++i)
    knots.push_back(uniform_in(rng, 0.05, 4.0));
  std::sort(knots.begin(), knots.end());

  struct Raw {
    double lo, hi, height;
  };
  std::vector<Raw> raw;
  raw.push_back({-knots[0], knots[0], uniform_in(rng, 0.2, 1.0) * b});
  for (int i = 0; i < pairs; ++i)
    raw.push_back({knots[1 + 2 * i], knots[2 + 2 * i], uniform_in(rng, 0.2, 1.0) * b});

  double mass = 0.0;
  for (const auto& r : raw)
    mass += (r.lo == -r.hi ? 1.0 : 2.0) * r.height * (r.hi - r.lo);
  // Dilating all abscissae by 1/mass rescales every component mass by the
  // same factor while leaving heights (and the bound b) untouched.
  const double gamma = 1.0 / mass;
  std::vector<BoxcarComponent> comps;
  for (const auto& r : raw) {
    const double lo = gamma * r.lo, hi = gamma * r.hi;
    const double w = r.height * (hi - lo);
    if (r.lo == -r.hi) {
      comps.push_back({lo, hi, w});
    } else {
      comps.push_back({lo, hi, w});
      comps.push_back({-hi, -lo, w});
    }
  }
  return ExtremalDistribution(0.0, std::move(comps));
}

ExtremalDistribution random_mixture(std::mt19937_64& rng) {
  switch (static_cast<int>(uniform01(rng) * 5.0)) {
    case 0:
      return make_symmetric_flat();
    case 1:
      return make_symmetric_extremal(uniform_in(rng, 1.2, 6.0));
    case 2:
      return make_one_sided_extremal(uniform_in(rng, 1.16, 8.0));
    case 3:
      return make_bounded_uniform(uniform_in(rng, 0.2, 3.0));
    default:
      return random_symmetric_bounded(rng, uniform_in(rng, 0.3, 2.0));
  }
}

const std::vector<std::string>& all_suite_names() {
  static const std::vector<std::string> names = {
      "continuity", "sharpness", "riesz",      "reflection",
      "sweeps",     "montecarlo", "bamber"};
  return names;
}

SuiteResult run_continuity_suite() {
  SuiteResult r;
  r.name = "continuity";
  const double tol = 1e-12;

  {
    const double t = consts::symmetric_junction();
    const double linear = 0.5 - t / (2.0 * consts::sqrt3());
    const double quadratic = 2.0 / (9.0 * t * t);
    r.cases.push_back(make_case("symmetric tail branches at 2/sqrt(3)",
                                std::abs(linear - quadratic), tol));
    const double absolute = std::abs((1.0 - t / consts::sqrt3()) - 4.0 / (9.0 * t * t));
    r.cases.push_back(
        make_case("absolute tail branches at 2/sqrt(3)", absolute, tol));
  }
  {
    const double t = consts::one_sided_junction();
    const double u = consts::symmetric_junction();  // junction root of the cubic
    const double linear = 1.0 - t / (2.0 * consts::sqrt3());
    const double quadratic = 4.0 * u * u / (9.0 * t * t * (u * u - 1.0));
    r.cases.push_back(make_case("one-sided tail branches at 4/sqrt(3)",
                                std::abs(linear - quadratic), tol));
    r.cases.push_back(make_case("junction root solves the cubic",
                                std::abs(tail_cubic_residual(t, u)),
                                1e-10 * t * t * t));
  }
  {
    const double mu = consts::shift_lower_junction();
    const double d = mu - consts::sqrt6();
    const double linear = d / (2.0 * consts::sqrt6());
    const double quadratic = 1.0 - 32.0 / (9.0 * d * d);
    r.cases.push_back(make_case("shift lower bound branches at sqrt(6)+4*sqrt(2/3)",
                                std::abs(linear - quadratic), tol));
  }
  {
    const double bm = 1.0;
    const double quadratic = bm + 0.5 * (1.0 - bm * bm);
    r.cases.push_back(make_case("bounded-density branches at b*mu = 1",
                                std::abs(quadratic - 1.0), tol));
  }
  finalize(r);
  return r;
}

SuiteResult run_sharpness_suite(const SuiteOptions& opts) {
  SuiteResult r;
  r.name = "sharpness";
  const double sym_j = consts::symmetric_junction();
  const double one_j = consts::one_sided_junction();

  if (opts.t_focus > 0.0) {
    const double t = opts.t_focus;
    if (t > sym_j) {
      const double attained = tail_prob(make_symmetric_extremal(t), t, opts.conv);
      const double bound = symmetric_unimodal_tail_bound(t).value;
      r.cases.push_back(make_case("symmetric attainment at t",
                                  std::abs(bound - attained), 1e-8,
                                  "|bound - attained tail|"));
    }
    if (t > one_j) {
      const RootSolve rs = solve_extremal_u(t);
      const double attained = tail_prob(make_one_sided_extremal(rs.u), t, opts.conv);
      const double bound = one_sided_tail_bound(t).value;
      r.cases.push_back(make_case("one-sided attainment at t",
                                  std::abs(bound - attained), 1e-8,
                                  "|bound - attained tail|"));
    }
    finalize(r);
    return r;
  }

  {
    double worst = 0.0;
    for (int k = 1; k <= 50; ++k) {
      const double t = sym_j + (20.0 - sym_j) * k / 50.0;
      const double attained = tail_prob(make_symmetric_extremal(t), t, opts.conv);
      worst = std::max(worst,
                       std::abs(symmetric_unimodal_tail_bound(t).value - attained));
    }
    r.cases.push_back(
        make_case("symmetric attainment, 50-point grid", worst, 1e-10));
  }
  {
    double worst = 0.0;
    for (int k = 1; k <= 50; ++k) {
      const double t = one_j + (20.0 - one_j) * k / 50.0;
      const RootSolve rs = solve_extremal_u(t);
      const double attained = tail_prob(make_one_sided_extremal(rs.u), t, opts.conv);
      worst = std::max(worst, std::abs(one_sided_tail_bound(t).value - attained));
    }
    r.cases.push_back(
        make_case("one-sided attainment, 50-point grid", worst, 1e-8));
  }
  {
    double worst = 0.0;
    const double bs[] = {0.25, 0.5, 1.0, 2.0, 4.0};
    for (int k = 1; k <= 50; ++k) {
      const double bm = k / 51.0;
      const double b = bs[k % 5];
      const double mu = bm / b;
      const ExtremalDistribution u = make_bounded_uniform(b);
      const double exact = prob_leq_shift(u, u, mu);
      worst = std::max(worst,
                       std::abs(bounded_density_upper_bound(b, mu).value - exact));
    }
    r.cases.push_back(
        make_case("bounded-density attainment, 50-point grid", worst, 1e-10));
  }
  finalize(r);
  return r;
}

SuiteResult run_riesz_suite(const SuiteOptions& opts) {
  SuiteResult r;
  r.name = "riesz";
  {
    const auto unit = IntervalSet::from({{0.0, 1.0}});
    const auto [lhs, rhs] = riesz_rearrangement_check(unit, unit, unit);
    r.cases.push_back(make_case("unit-interval case lhs", std::abs(lhs - 0.5), 1e-12));
    r.cases.push_back(make_case("unit-interval case rhs", std::abs(rhs - 0.75), 1e-12));
  }
  {
    const auto sym = IntervalSet::from({{-1.0, 1.0}});
    const auto [lhs, rhs] = riesz_rearrangement_check(sym, sym, sym);
    r.cases.push_back(
        make_case("centered intervals give equality", std::abs(lhs - rhs), 1e-12));
  }
  {
    std::mt19937_64 rng(opts.seed);
    double worst = -1.0;
    std::size_t violations = 0;
    for (std::size_t i = 0; i < opts.cases; ++i) {
      const auto a = random_interval_set(rng);
      const auto b = random_interval_set(rng);
      const auto c = random_interval_set(rng);
      const auto [lhs, rhs] = riesz_rearrangement_check(a, b, c);
      worst = std::max(worst, lhs - rhs);
      if (lhs > rhs + 1e-10) ++violations;
    }
    std::ostringstream detail;
    detail << violations << " violations in " << opts.cases << " random triples";
    r.cases.push_back(
        make_case("random triples: lhs <= rhs", worst, 1e-10, detail.str()));
  }
  finalize(r);
  return r;
}

SuiteResult run_reflection_suite(const SuiteOptions& opts) {
  SuiteResult r;
  r.name = "reflection";
  std::mt19937_64 rng(opts.seed + 1);
  double worst = 0.0;
  const std::size_t n = std::min<std::size_t>(std::max<std::size_t>(opts.cases, 3), 100);
  for (std::size_t i = 0; i < n; ++i) {
    const auto d0 = random_symmetric_bounded(rng, uniform_in(rng, 0.3, 2.0));
    const auto d1 = random_symmetric_bounded(rng, uniform_in(rng, 0.3, 2.0));
    const double mu = (i == 0) ? 0.0 : (i == 1) ? 50.0 : uniform_in(rng, 0.0, 3.0);
    const auto [direct, via_abs] = reflection_identity_check(d0, d1, mu);
    worst = std::max(worst, std::abs(direct - via_abs));
  }
  std::ostringstream detail;
  detail << n << " symmetric atom-free configs";
  r.cases.push_back(
      make_case("direct vs |difference| route", worst, 1e-9, detail.str()));
  finalize(r);
  return r;
}

SuiteResult run_sweep_suite(const SuiteOptions& opts) {
  SuiteResult r;
  r.name = "sweeps";
  const std::size_t res = std::max<std::size_t>(opts.grid, 4);
  const auto resolutions = {res / 4, res / 2, res};

  const auto check = [&](const std::string& label, bool symmetric, double t) {
    double prev_gap = 0.0;
    bool have_prev = false;
    SweepReport report;
    bool monotone = true;
    for (std::size_t rr : resolutions) {
      report = symmetric ? sweep_symmetric_tail(t, {rr})
                         : sweep_one_sided_tail(t, {rr});
      if (have_prev && report.gap > prev_gap + 1e-12) monotone = false;
      prev_gap = report.gap;
      have_prev = true;
    }
    std::ostringstream detail;
    detail << "best=" << report.best_value << " bound=" << report.bound_value
           << " configs=" << report.configs;
    r.cases.push_back(make_case(label + ": no config exceeds the bound",
                                -report.gap, 1e-8, detail.str()));
    r.cases.push_back(make_case(label + ": gap at full resolution", report.gap,
                                1e-3));
    SuiteCase mono;
    mono.name = label + ": gap nonincreasing under refinement";
    mono.pass = monotone;
    mono.observed = report.gap;
    mono.limit = prev_gap;
    r.cases.push_back(mono);
  };

  for (double t : {1.0, 2.0, 3.18198, 5.0}) check("symmetric t=" + std::to_string(t), true, t);
  for (double t : {1.0, 2.0, 3.18198, 8.063242})
    check("one-sided t=" + std::to_string(t), false, t);
  finalize(r);
  return r;
}

SuiteResult run_montecarlo_suite(const SuiteOptions& opts) {
  SuiteResult r;
  r.name = "montecarlo";
  std::mt19937_64 rng(opts.seed + 2);
  const std::size_t configs = std::min<std::size_t>(std::max<std::size_t>(opts.cases, 1), 50);
  double worst_sigma = 0.0;
  for (std::size_t i = 0; i < configs; ++i) {
    ExtremalDistribution dx = random_mixture(rng);
    ExtremalDistribution dy = random_mixture(rng);
    double mu = 0.0, exact = 0.0;
    // Keep the target probability interior so the binomial error bar is honest.
    for (int attempt = 0; attempt < 64; ++attempt) {
      mu = uniform_in(rng, -2.0, 4.0);
      exact = prob_leq_shift(dx, dy, mu);
      if (exact > 0.05 && exact < 0.95) break;
    }
    const auto est = monte_carlo_prob(dx, dy, mu, opts.mc_n, opts.seed + 100 + i);
    const double se = std::max(est.std_error, 1.0 / static_cast<double>(opts.mc_n));
    worst_sigma = std::max(worst_sigma, std::abs(est.estimate - exact) / se);
  }
  std::ostringstream detail;
  detail << configs << " configs at n=" << opts.mc_n;
  r.cases.push_back(make_case("sampling vs quadrature, worst |z|", worst_sigma,
                              4.0, detail.str()));
  finalize(r);
  return r;
}

SuiteResult run_bamber_suite(const SuiteOptions& opts) {
  SuiteResult r;
  r.name = "bamber";
  std::mt19937_64 rng(opts.seed + 3);
  const std::size_t pairs = std::min<std::size_t>(std::max<std::size_t>(opts.cases, 1), 500);
  double worst_identity = 0.0, worst_swap = 0.0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const auto draw = [&rng](std::size_t n) {
      std::vector<double> v(n);
      for (auto& x : v) x = uniform_in(rng, -10.0, 10.0);
      return v;
    };
    const std::size_t n0 = 1 + static_cast<std::size_t>(uniform01(rng) * 500.0);
    const std::size_t n1 = 1 + static_cast<std::size_t>(uniform01(rng) * 500.0);
    EmpiricalSample s0(draw(n0), SampleLabel::Class0);
    EmpiricalSample s1(draw(n1), SampleLabel::Class1);
    const double mw = auc_mann_whitney(s0, s1);
    const double trap = roc_curve(s0, s1).auc_trapezoid;
    worst_identity = std::max(worst_identity, std::abs(mw - trap));
    const double swapped = auc_mann_whitney(s1, s0);
    worst_swap = std::max(worst_swap, std::abs(mw + swapped - 1.0));
  }
  std::ostringstream detail;
  detail << pairs << " random pairs, sizes 1-500";
  r.cases.push_back(make_case("rank AUC equals trapezoid AUC", worst_identity,
                              1e-12, detail.str()));
  r.cases.push_back(make_case("label-swap AUCs sum to 1", worst_swap, 1e-12));
  finalize(r);
  return r;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const SuiteOptions& opts) {
  std::vector<std::string> expanded;
  for (const auto& n : names) {
    if (n == "all") {
      expanded = all_suite_names();
      break;
    }
    expanded.push_back(n);
  }
  std::vector<SuiteResult> results;
  for (const auto& n : expanded) {
    if (n == "continuity")
      results.push_back(run_continuity_suite());
    else if (n == "sharpness")
      results.push_back(run_sharpness_suite(opts));
    else if (n == "riesz")
      results.push_back(run_riesz_suite(opts));
    else if (n == "reflection")
      results.push_back(run_reflection_suite(opts));
    else if (n == "sweeps")
      results.push_back(run_sweep_suite(opts));
    else if (n == "montecarlo")
      results.push_back(run_montecarlo_suite(opts));
    else if (n == "bamber")
      results.push_back(run_bamber_suite(opts));
    else
      throw std::invalid_argument("unknown suite: " + n);
  }
  return results;
}

}  // namespace rocbounds
