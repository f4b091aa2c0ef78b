#include "rocbounds/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "rocbounds/bounds.hpp"

namespace rocbounds {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Geometric grid with `resolution` intervals. Doubling the resolution keeps
// every existing node (k/R survives as 2k/2R exactly), so refined sweeps
// can only improve.
std::vector<double> geometric_grid(double lo, double hi, std::size_t resolution) {
  std::vector<double> nodes(resolution + 1);
  const double span = std::log(hi / lo);
  for (std::size_t k = 0; k <= resolution; ++k)
    nodes[k] = lo * std::exp(static_cast<double>(k) / static_cast<double>(resolution) * span);
  nodes.front() = lo;
  nodes.back() = hi;
  return nodes;
}

double positive_part(double x) { return x > 0.0 ? x : 0.0; }

// Tail of the symmetric boxcar U(-a, a) at threshold t > 0.
double symmetric_boxcar_tail(double a, double t) {
  return positive_part(a - t) / (2.0 * a);
}

// Tail of the one-sided boxcar U(0, a) at threshold t > 0.
double one_sided_boxcar_tail(double a, double t) {
  return t >= a ? 0.0 : 1.0 - t / a;
}

// Integral over [c1, c2] of the trapezoid that rises from 0 at k0 to
// height m at k1, stays flat until k2, and falls back to 0 at k3.
double trapezoid_integral(double k0, double k1, double k2, double k3, double m,
                          double c1, double c2) {
  double total = 0.0;
  {  // rising piece, T(y) = y - k0
    const double p = std::max(c1, k0), q = std::min(c2, k1);
    if (q > p) total += 0.5 * ((q - k0) * (q - k0) - (p - k0) * (p - k0));
  }
  {  // plateau
    const double p = std::max(c1, k1), q = std::min(c2, k2);
    if (q > p) total += m * (q - p);
  }
  {  // falling piece, T(y) = k3 - y
    const double p = std::max(c1, k2), q = std::min(c2, k3);
    if (q > p) total += 0.5 * ((k3 - p) * (k3 - p) - (k3 - q) * (k3 - q));
  }
  return total;
}

// Integral of I_a(x) I_b(x - y) I_c(y) dx dy for single intervals:
// the inner x-overlap is a trapezoid in y, clipped against c.
double indicator_cross_term(std::pair<double, double> a,
                            std::pair<double, double> b,
                            std::pair<double, double> c) {
  const double wa = a.second - a.first;
  const double wb = b.second - b.first;
  const double m = std::min(wa, wb);
  const double k0 = a.first - b.second;
  const double k3 = a.second - b.first;
  const double k1 = k0 + m;
  const double k2 = k3 - m;
  return trapezoid_integral(k0, k1, k2, k3, m, c.first, c.second);
}

struct BestTracker {
  double best = -1.0;
  std::map<std::string, double> params;
  std::size_t configs = 0;

  void offer(double value, std::map<std::string, double> p) {
    ++configs;
    if (value > best) {
      best = value;
      params = std::move(p);
    }
  }
};

}  // namespace

IntervalSet IntervalSet::from(std::vector<std::pair<double, double>> ivals) {
  for (const auto& [lo, hi] : ivals)
    require(std::isfinite(lo) && std::isfinite(hi) && lo < hi,
            "interval set: each interval needs finite lo < hi");
  std::sort(ivals.begin(), ivals.end());
  for (std::size_t i = 0; i + 1 < ivals.size(); ++i)
    require(ivals[i + 1].first >= ivals[i].second - 1e-15,
            "interval set: intervals overlap");
  IntervalSet s;
  s.intervals = std::move(ivals);
  return s;
}

double IntervalSet::measure() const {
  double m = 0.0;
  for (const auto& [lo, hi] : intervals) m += hi - lo;
  return m;
}

IntervalSet IntervalSet::centered() const {
  const double half = 0.5 * measure();
  IntervalSet s;
  if (half > 0.0) s.intervals.push_back({-half, half});
  return s;
}

double uniform_sum_cdf(double lo1, double hi1, double lo2, double hi2, double t) {
  require(lo1 < hi1 && lo2 < hi2, "uniform sum needs nondegenerate intervals");
  const double lo = lo1 + lo2;
  const double hi = hi1 + hi2;
  if (t <= lo) return 0.0;
  if (t >= hi) return 1.0;
  const double w1 = hi1 - lo1, w2 = hi2 - lo2;
  const double m1 = std::min(w1, w2), m2 = std::max(w1, w2);
  const double area = w1 * w2;
  if (t <= lo + m1) return 0.5 * (t - lo) * (t - lo) / area;
  if (t <= lo + m2) return m1 * (t - lo - 0.5 * m1) / area;
  return 1.0 - 0.5 * (hi - t) * (hi - t) / area;
}

double prob_leq_shift(const ExtremalDistribution& dx,
                      const ExtremalDistribution& dy, double mu) {
  require(std::isfinite(mu), "shift mu must be finite");
  double p = 0.0;
  const double ax = dx.atom_weight();
  const double ay = dy.atom_weight();
  if (ax > 0.0 && ay > 0.0 && mu >= 0.0) p += ax * ay;
  if (ax > 0.0) {
    // X = 0: P(0 <= Y + mu) = P(Y >= -mu)
    for (const auto& cy : dy.components()) {
      const double frac = (cy.hi + mu) / (cy.hi - cy.lo);
      p += ax * cy.weight * std::clamp(frac, 0.0, 1.0);
    }
  }
  if (ay > 0.0) {
    // Y = 0: P(X <= mu)
    for (const auto& cx : dx.components()) {
      const double frac = (mu - cx.lo) / (cx.hi - cx.lo);
      p += ay * cx.weight * std::clamp(frac, 0.0, 1.0);
    }
  }
  for (const auto& cx : dx.components())
    for (const auto& cy : dy.components())
      p += cx.weight * cy.weight *
           uniform_sum_cdf(cx.lo, cx.hi, -cy.hi, -cy.lo, mu);
  return std::clamp(p, 0.0, 1.0);
}

ExtremalDistribution symmetrize(const ExtremalDistribution& d) {
  std::vector<BoxcarComponent> comps;
  for (const auto& c : d.components()) {
    comps.push_back({c.lo, c.hi, 0.5 * c.weight});
    comps.push_back({-c.hi, -c.lo, 0.5 * c.weight});
  }
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
  });
  std::vector<BoxcarComponent> merged;
  for (const auto& c : comps) {
    if (!merged.empty() && merged.back().lo == c.lo && merged.back().hi == c.hi)
      merged.back().weight += c.weight;
    else
      merged.push_back(c);
  }
  return ExtremalDistribution(d.atom_weight(), std::move(merged));
}

SweepReport sweep_symmetric_tail(double t, const SweepGrid& grid) {
  require(std::isfinite(t) && t > 0.0, "sweep requires t > 0");
  require(grid.resolution >= 2, "sweep resolution must be at least 2");
  const double as = consts::sqrt3();
  const double a_max = std::max(3.0 * t, 20.0 * as);
  BestTracker best;

  // Atom plus one symmetric boxcar, variance pinned by beta = 3/a^2.
  for (double a : geometric_grid(as, a_max, grid.resolution)) {
    const double beta = 3.0 / (a * a);
    best.offer(beta * symmetric_boxcar_tail(a, t),
               {{"family", 1.0}, {"a", a}, {"beta", beta}});
  }

  // Two symmetric boxcars; the variance constraint fixes beta.
  const auto inner = geometric_grid(1e-3 * as, as * (1.0 - 1e-9), grid.resolution);
  const auto outer = geometric_grid(as * (1.0 + 1e-9), a_max, grid.resolution);
  for (double a1 : inner) {
    const double t1 = symmetric_boxcar_tail(a1, t);
    for (double a2 : outer) {
      const double beta = (3.0 - a1 * a1) / (a2 * a2 - a1 * a1);
      if (!(beta > 0.0 && beta < 1.0)) continue;
      const double value = (1.0 - beta) * t1 + beta * symmetric_boxcar_tail(a2, t);
      best.offer(value, {{"family", 2.0}, {"a1", a1}, {"a2", a2}, {"beta", beta}});
    }
  }

  SweepReport report;
  report.target = t;
  report.best_value = best.best;
  report.bound_value = symmetric_unimodal_tail_bound(t).value;
  report.gap = report.bound_value - report.best_value;
  report.best_params = std::move(best.params);
  report.configs = best.configs;
  return report;
}

SweepReport sweep_one_sided_tail(double t, const SweepGrid& grid) {
  require(std::isfinite(t) && t > 0.0, "sweep requires t > 0");
  require(grid.resolution >= 2, "sweep resolution must be at least 2");
  const BoundResult bound = one_sided_tail_bound(t);
  BestTracker best;

  if (t <= consts::one_sided_junction()) {
    // Linear regime: the bound is uniform over the mean, so sweep the
    // unconstrained one-sided extreme-point families.
    const double u_lo = consts::symmetric_junction();
    const double u_hi = std::max(4.0 * t, 30.0);
    for (double u : geometric_grid(u_lo, u_hi, grid.resolution)) {
      const double beta = 4.0 / (3.0 * u * u);
      const double a = 1.5 * u * u / std::sqrt(u * u - 1.0);
      best.offer(beta * one_sided_boxcar_tail(a, t),
                 {{"family", 1.0}, {"u", u}, {"a", a}, {"beta", beta}});
    }
    const double a_max = std::max(4.0 * t, 12.0);
    const auto nodes = geometric_grid(1e-2, a_max, grid.resolution);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double a1 = nodes[i];
      const double tail1 = one_sided_boxcar_tail(a1, t);
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        const double a2 = nodes[j];
        // Variance-1 constraint as a quadratic in the outer weight.
        const double delta = 0.5 * (a2 - a1);
        const double q = (a2 * a2 - a1 * a1) / 3.0 - a1 * delta;
        const double c0 = 1.0 - a1 * a1 / 12.0;
        const double disc = q * q - 4.0 * delta * delta * c0;
        if (disc < 0.0) continue;
        const double root = std::sqrt(disc);
        for (double beta : {(q - root) / (2.0 * delta * delta),
                            (q + root) / (2.0 * delta * delta)}) {
          if (!(beta > 0.0 && beta < 1.0)) continue;
          const double value =
              (1.0 - beta) * tail1 + beta * one_sided_boxcar_tail(a2, t);
          best.offer(value,
                     {{"family", 2.0}, {"a1", a1}, {"a2", a2}, {"beta", beta}});
        }
      }
    }
  } else {
    // Quadratic regime: the bound holds per mean, so the admissible class
    // pins both the variance and the mean of the sharp extremal at t.
    const RootSolve rs = solve_extremal_u(t);
    const double m = 1.0 / std::sqrt(rs.u * rs.u - 1.0);
    const double m2 = 3.0 * (1.0 + m * m);

    {  // the unique pinned atom-plus-boxcar member: the extremal itself
      const ExtremalDistribution x = make_one_sided_extremal(rs.u);
      best.offer(x.tail(t), {{"family", 1.0}, {"u", rs.u}});
    }

    // Two boxcars matching both moments; a1 is free, a2 follows.
    if (2.0 * m > 2e-2) {
      for (double a1 : geometric_grid(1e-2, 2.0 * m * (1.0 - 1e-9), grid.resolution)) {
        const double k = 2.0 * m - a1;
        const double a2 = (m2 - a1 * a1 - k * a1) / k;
        if (!(a2 > a1)) continue;
        const double beta = k / (a2 - a1);
        if (!(beta > 0.0 && beta <= 1.0)) continue;
        const double value = (1.0 - beta) * one_sided_boxcar_tail(a1, t) +
                             beta * one_sided_boxcar_tail(a2, t);
        best.offer(value,
                   {{"family", 2.0}, {"a1", a1}, {"a2", a2}, {"beta", beta}});
      }
    }

    // Atom plus two boxcars (three-component extreme points under the two
    // moment constraints); weights from the 2x2 moment system.
    const double a_max = std::max(4.0 * t, 40.0);
    const auto nodes = geometric_grid(1e-2, a_max, grid.resolution);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double a1 = nodes[i];
      const double tail1 = one_sided_boxcar_tail(a1, t);
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        const double a2 = nodes[j];
        const double b1 = (2.0 * m * a2 - m2) / (a1 * (a2 - a1));
        const double b2 = (m2 - 2.0 * m * a1) / (a2 * (a2 - a1));
        if (!(b1 >= 0.0 && b2 >= 0.0 && b1 + b2 <= 1.0)) continue;
        const double value = b1 * tail1 + b2 * one_sided_boxcar_tail(a2, t);
        best.offer(value, {{"family", 3.0},
                           {"a1", a1},
                           {"a2", a2},
                           {"beta1", b1},
                           {"beta2", b2}});
      }
    }
  }

  SweepReport report;
  report.target = t;
  report.best_value = best.best;
  report.bound_value = bound.value;
  report.gap = report.bound_value - report.best_value;
  report.best_params = std::move(best.params);
  report.configs = best.configs;
  return report;
}

std::pair<double, double> riesz_rearrangement_check(const IntervalSet& a,
                                                    const IntervalSet& b,
                                                    const IntervalSet& c) {
  const auto evaluate = [](const IntervalSet& sa, const IntervalSet& sb,
                           const IntervalSet& sc) {
    double total = 0.0;
    for (const auto& ia : sa.intervals)
      for (const auto& ib : sb.intervals)
        for (const auto& ic : sc.intervals)
          total += indicator_cross_term(ia, ib, ic);
    return total;
  };
  const double lhs = evaluate(a, b, c);
  const double rhs = evaluate(a.centered(), b.centered(), c.centered());
  return {lhs, rhs};
}

std::pair<double, double> reflection_identity_check(
    const ExtremalDistribution& d0, const ExtremalDistribution& d1, double mu) {
  require(d0.atom_weight() == 0.0 && d1.atom_weight() == 0.0,
          "reflection identity requires atom-free inputs");
  require(d0.is_symmetric() && d1.is_symmetric(),
          "reflection identity requires symmetric inputs");
  const double direct = prob_leq_shift(d0, d1, mu);

  // P(|Y1 - Y0| < mu) straight from the difference CDF.
  double p_abs = 0.0;
  for (const auto& c1 : d1.components())
    for (const auto& c0 : d0.components()) {
      const double hi = uniform_sum_cdf(c1.lo, c1.hi, -c0.hi, -c0.lo, mu);
      const double lo = uniform_sum_cdf(c1.lo, c1.hi, -c0.hi, -c0.lo, -mu);
      p_abs += c1.weight * c0.weight * (hi - lo);
    }
  const double via_abs = 0.5 * (1.0 + p_abs);
  return {direct, via_abs};
}

MonteCarloEstimate monte_carlo_prob(const ExtremalDistribution& dx,
                                    const ExtremalDistribution& dy, double mu,
                                    std::size_t n, std::uint64_t seed) {
  require(n >= 1000, "monte carlo needs n >= 1000");
  require(std::isfinite(mu), "shift mu must be finite");
  QuantileTable qx(dx), qy(dy);
  std::mt19937_64 rng(seed);
  const auto uniform01 = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = qx(uniform01());
    const double y = qy(uniform01());
    if (x <= y + mu) ++hits;
  }
  MonteCarloEstimate est;
  est.n = n;
  est.seed = seed;
  est.estimate = static_cast<double>(hits) / static_cast<double>(n);
  est.std_error =
      std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(n));
  return est;
}

}  // namespace rocbounds
