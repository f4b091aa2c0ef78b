#include <doctest.h>

#include <cmath>
#include <random>

#include "rocbounds/bounds.hpp"
#include "rocbounds/extremal.hpp"
#include "rocbounds/suites.hpp"
#include "rocbounds/verify.hpp"
#include "test_util.hpp"

using namespace rocbounds;
using testutil::uniform_in;

TEST_CASE("uniform sum cdf pieces") {
  // X+Y for X,Y ~ U(0,1): P(X+Y <= 1) = 0.5, quadratic ends
  CHECK(uniform_sum_cdf(0, 1, 0, 1, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(uniform_sum_cdf(0, 1, 0, 1, 0.5) == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(uniform_sum_cdf(0, 1, 0, 1, 1.5) == doctest::Approx(0.875).epsilon(1e-15));
  CHECK(uniform_sum_cdf(0, 1, 0, 1, -0.1) == 0.0);
  CHECK(uniform_sum_cdf(0, 1, 0, 1, 2.1) == 1.0);
  // unequal widths: plateau piece is linear
  CHECK(uniform_sum_cdf(0, 1, 0, 3, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(uniform_sum_cdf(0, 1, 0, 3, 1.5) ==
        doctest::Approx((0.5 + 0.5) / 3.0).epsilon(1e-14));
}

TEST_CASE("shift probability: worked values") {
  const auto u1 = make_bounded_uniform(1.0);
  CHECK(prob_leq_shift(u1, u1, 0.5) == doctest::Approx(0.875).epsilon(1e-14));
  CHECK(prob_leq_shift(u1, u1, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(prob_leq_shift(u1, u1, 5.0) == 1.0);
  CHECK(prob_leq_shift(u1, u1, -5.0) == 0.0);

  const auto flat = make_symmetric_flat();
  CHECK(prob_leq_shift(flat, flat, 0.0) == doctest::Approx(0.5).epsilon(1e-14));

  // atoms on both sides: the (0,0) pair contributes at mu >= 0
  const auto with_atom = make_symmetric_extremal(2.0);
  const double base = prob_leq_shift(with_atom, with_atom, 0.0);
  CHECK(base == doctest::Approx(0.5 + 0.5 * (2.0 / 3.0) * (2.0 / 3.0)).epsilon(1e-14));
}

TEST_CASE("shift probability: exchangeability and translation properties") {
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 30; ++rep) {
    const auto d = random_symmetric_bounded(rng, uniform_in(rng, 0.3, 2.0));
    // symmetric atom-free: P(X <= Y) = 1/2
    CHECK(prob_leq_shift(d, d, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
    // complement: P(X <= Y + mu) + P(Y <= X - mu)^c structure
    const double mu = uniform_in(rng, -2.0, 2.0);
    const auto d2 = random_symmetric_bounded(rng, uniform_in(rng, 0.3, 2.0));
    const double p = prob_leq_shift(d, d2, mu);
    const double q = prob_leq_shift(d2, d, -mu);
    CHECK(p + q == doctest::Approx(1.0).epsilon(1e-12));  // atom-free continuity
  }
}

TEST_CASE("shift probability matches monte carlo on a 50-config random grid") {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 50; ++rep) {
    const auto dx = random_mixture(rng);
    const auto dy = random_mixture(rng);
    double mu = 0.0, exact = 0.0;
    for (int tries = 0; tries < 64; ++tries) {
      mu = uniform_in(rng, -2.0, 4.0);
      exact = prob_leq_shift(dx, dy, mu);
      if (exact > 0.05 && exact < 0.95) break;
    }
    const auto est = monte_carlo_prob(dx, dy, mu, 100000, 900 + rep);
    CHECK(std::abs(est.estimate - exact) <= 4.0 * est.std_error + 1e-9);
  }
}

TEST_CASE("monte carlo: determinism and preconditions") {
  const auto d = make_bounded_uniform(1.0);
  const auto a = monte_carlo_prob(d, d, 0.5, 10000, 7);
  const auto b = monte_carlo_prob(d, d, 0.5, 10000, 7);
  CHECK(a.estimate == b.estimate);
  CHECK_THROWS_AS(monte_carlo_prob(d, d, 0.5, 100, 7), std::invalid_argument);
}

TEST_CASE("monte carlo at 1e7 nails the uniform-pair value") {
  const auto d = make_bounded_uniform(1.0);
  const auto est = monte_carlo_prob(d, d, 0.5, 10000000, 424242);
  CHECK(std::abs(est.estimate - 0.875) < 0.0005);
}

TEST_CASE("symmetrize: fixed point, variance identity, zero mean") {
  const auto sym = make_symmetric_extremal(2.5);
  const auto fixed = symmetrize(sym);
  CHECK(fixed.atom_weight() == doctest::Approx(sym.atom_weight()).epsilon(1e-15));
  REQUIRE(fixed.components().size() == sym.components().size());
  CHECK(fixed.components()[0].lo == doctest::Approx(sym.components()[0].lo));
  CHECK(fixed.components()[0].weight == doctest::Approx(sym.components()[0].weight));

  for (double u : {1.2, 1.5, 3.0, 8.0}) {
    const auto d = make_one_sided_extremal(u);
    const auto s = symmetrize(d);
    CHECK(std::abs(s.mean()) < 1e-15);
    const double expect = 1.0 + d.mean() * d.mean();  // u^2/(u^2-1)
    CHECK(std::abs(s.variance() - expect) < 1e-12);
    CHECK(std::abs(testutil::quadrature_variance(s) - u * u / (u * u - 1.0)) < 1e-10);
    CHECK(s.is_symmetric());
  }
}

TEST_CASE("symmetric sweep converges to the closed-form bound") {
  {
    const auto r = sweep_symmetric_tail(2.0, {300});
    CHECK(r.best_value == doctest::Approx(1.0 / 18.0).epsilon(1e-4));
    CHECK(r.gap >= -1e-8);
    CHECK(r.gap <= 1e-3);
    CHECK(r.best_params.at("family") == 1.0);
  }
  {
    const auto r = sweep_symmetric_tail(1.0, {300});
    CHECK(r.best_value ==
          doctest::Approx(0.5 - 1.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-6));
    CHECK(r.gap >= -1e-8);
  }
  // refinement never makes the gap worse (nested grids)
  double prev_gap = 1.0;
  for (std::size_t res : {64, 128, 256}) {
    const auto r = sweep_symmetric_tail(3.0, {res});
    CHECK(r.gap <= prev_gap + 1e-12);
    prev_gap = r.gap;
  }
}

TEST_CASE("one-sided sweep: both regimes") {
  {
    const auto r = sweep_one_sided_tail(2.0, {300});
    CHECK(r.best_value ==
          doctest::Approx(1.0 - 2.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-6));
    CHECK(r.gap >= -1e-8);
    CHECK(r.gap <= 1e-3);
  }
  {
    const auto r = sweep_one_sided_tail(3.18198, {300});
    CHECK(r.best_value == doctest::Approx(4.0 / 81.0).epsilon(1e-4));
    CHECK(std::abs(r.best_params.at("u") - 3.0) < 1e-3);
    CHECK(r.gap >= -1e-8);
    CHECK(r.gap <= 1e-3);
  }
}

TEST_CASE("riesz rearrangement: worked cases and the random property") {
  const auto unit = IntervalSet::from({{0.0, 1.0}});
  const auto [lhs, rhs] = riesz_rearrangement_check(unit, unit, unit);
  CHECK(lhs == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(rhs == doctest::Approx(0.75).epsilon(1e-14));

  const auto sym = IntervalSet::from({{-1.0, 1.0}});
  const auto [l2, r2] = riesz_rearrangement_check(sym, sym, sym);
  CHECK(l2 == doctest::Approx(r2).epsilon(1e-14));

  // numeric 2-D midpoint oracle for the unit-interval case
  {
    const int n = 400;
    double acc = 0.0;
    const double h = 1.0 / n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double x = (i + 0.5) * h, y = (j + 0.5) * h;
        if (x - y > 0.0 && x - y < 1.0) acc += h * h;
      }
    CHECK(acc == doctest::Approx(0.5).epsilon(2e-2));
  }

  std::mt19937_64 rng(77);
  for (int rep = 0; rep < 300; ++rep) {
    const auto rand_set = [&rng]() {
      const int pieces = 1 + static_cast<int>(testutil::uniform01(rng) * 3.0);
      std::vector<double> e;
      for (int i = 0; i < 2 * pieces; ++i) e.push_back(uniform_in(rng, -5, 5));
      std::sort(e.begin(), e.end());
      std::vector<std::pair<double, double>> iv;
      for (int i = 0; i < pieces; ++i)
        if (e[2 * i + 1] - e[2 * i] > 1e-9) iv.push_back({e[2 * i], e[2 * i + 1]});
      if (iv.empty()) iv.push_back({0.0, 1.0});
      return IntervalSet::from(std::move(iv));
    };
    const auto [a, b] = riesz_rearrangement_check(rand_set(), rand_set(), rand_set());
    CHECK(a <= b + 1e-10);
  }
}

TEST_CASE("interval set validation and measure") {
  CHECK_THROWS_AS(IntervalSet::from({{1.0, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(IntervalSet::from({{0.0, 2.0}, {1.0, 3.0}}), std::invalid_argument);
  const auto s = IntervalSet::from({{3.0, 4.0}, {0.0, 2.0}});
  CHECK(s.measure() == doctest::Approx(3.0));
  CHECK(s.intervals.front().first == 0.0);  // sorted
  const auto c = s.centered();
  REQUIRE(c.intervals.size() == 1);
  CHECK(c.intervals[0].first == doctest::Approx(-1.5));
  CHECK(c.intervals[0].second == doctest::Approx(1.5));
}

TEST_CASE("reflection identity") {
  const auto u1 = make_bounded_uniform(1.0);
  {
    const auto [direct, via] = reflection_identity_check(u1, u1, 0.5);
    CHECK(direct == doctest::Approx(0.875).epsilon(1e-12));
    CHECK(via == doctest::Approx(0.875).epsilon(1e-12));
  }
  {
    const auto [direct, via] = reflection_identity_check(u1, u1, 0.0);
    CHECK(direct == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(via == doctest::Approx(0.5).epsilon(1e-12));
  }
  {
    const auto [direct, via] = reflection_identity_check(u1, u1, 100.0);
    CHECK(direct == doctest::Approx(1.0));
    CHECK(via == doctest::Approx(1.0));
  }

  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 25; ++rep) {
    const auto d0 = random_symmetric_bounded(rng, uniform_in(rng, 0.3, 2.0));
    const auto d1 = random_symmetric_bounded(rng, uniform_in(rng, 0.3, 2.0));
    const auto [direct, via] = reflection_identity_check(d0, d1, uniform_in(rng, 0.0, 4.0));
    CHECK(std::abs(direct - via) <= 1e-9);
  }

  // preconditions: atoms and asymmetry are rejected
  CHECK_THROWS_AS(reflection_identity_check(make_symmetric_extremal(2.0), u1, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(reflection_identity_check(make_one_sided_extremal(3.0), u1, 0.5),
                  std::invalid_argument);
}

TEST_CASE("bounded-density sharpness: the uniform pair attains the bound") {
  for (int k = 1; k <= 30; ++k) {
    const double bm = k / 31.0;
    for (double b : {0.5, 1.0, 2.0}) {
      const double mu = bm / b;
      const auto u = make_bounded_uniform(b);
      const double exact = prob_leq_shift(u, u, mu);
      CHECK(std::abs(exact - (bm + 0.5 * (1.0 - bm * bm))) < 1e-12);
    }
  }
}

TEST_CASE("suite runners report pass") {
  SuiteOptions opts;
  opts.cases = 50;
  opts.mc_n = 20000;
  opts.grid = 64;
  for (const auto& sr : run_suites({"all"}, opts)) {
    INFO(sr.name);
    CHECK(sr.pass);
  }
  CHECK_THROWS_AS(run_suites({"nope"}, opts), std::invalid_argument);
}
