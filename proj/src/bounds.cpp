#include "rocbounds/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace rocbounds {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

void finish(BoundResult& r, double raw) {
  r.params["raw_value"] = raw;
  r.value = clamp01(raw);
}

}  // namespace

const char* to_string(Branch b) {
  switch (b) {
    case Branch::Linear: return "LINEAR";
    case Branch::Quadratic: return "QUADRATIC";
    case Branch::Saturated: return "SATURATED";
    case Branch::Vacuous: return "VACUOUS";
  }
  return "?";
}

const char* to_string(Direction d) {
  return d == Direction::Upper ? "UPPER" : "LOWER";
}

Branch branch_from_string(const std::string& s) {
  if (s == "LINEAR") return Branch::Linear;
  if (s == "QUADRATIC") return Branch::Quadratic;
  if (s == "SATURATED") return Branch::Saturated;
  if (s == "VACUOUS") return Branch::Vacuous;
  throw std::invalid_argument("unknown branch: " + s);
}

Direction direction_from_string(const std::string& s) {
  if (s == "UPPER") return Direction::Upper;
  if (s == "LOWER") return Direction::Lower;
  throw std::invalid_argument("unknown direction: " + s);
}

namespace consts {
double sqrt3() { return std::sqrt(3.0); }
double sqrt6() { return std::sqrt(6.0); }
double symmetric_junction() { return 2.0 / sqrt3(); }
double one_sided_junction() { return 4.0 / sqrt3(); }
double shift_lower_junction() { return sqrt6() + 4.0 * std::sqrt(2.0 / 3.0); }
}  // namespace consts

double tail_cubic_residual(double t, double u) {
  const double s = std::sqrt(u * u - 1.0);
  const double c = u * u / s;  // the positive root the cubic encodes
  return t * t * t - 1.5 * c * t * t + 0.5 * c * c * c;
}

BoundResult gauss_tail_bound(double s, double tau) {
  require(std::isfinite(s) && s >= 0.0, "gauss bound requires s >= 0");
  require(std::isfinite(tau) && tau > 0.0, "gauss bound requires tau > 0");
  BoundResult r;
  r.direction = Direction::Upper;
  r.params["s"] = s;
  r.params["tau"] = tau;
  const double crossover = 2.0 * tau / consts::sqrt3();
  double raw;
  if (s <= crossover) {
    r.branch = Branch::Linear;
    raw = 1.0 - s / (consts::sqrt3() * tau);
  } else {
    r.branch = Branch::Quadratic;
    raw = 4.0 * tau * tau / (9.0 * s * s);
  }
  finish(r, raw);
  return r;
}

BoundResult symmetric_unimodal_tail_bound(double t) {
  require(std::isfinite(t) && t > 0.0, "symmetric tail bound requires t > 0");
  BoundResult r;
  r.direction = Direction::Upper;
  r.params["t"] = t;
  double raw;
  if (t <= consts::symmetric_junction()) {
    r.branch = Branch::Linear;
    raw = 0.5 - t / (2.0 * consts::sqrt3());
    r.params["flat_halfwidth"] = consts::sqrt3();
  } else {
    r.branch = Branch::Quadratic;
    const double beta = 4.0 / (3.0 * t * t);
    raw = 2.0 / (9.0 * t * t);
    r.params["beta_t"] = beta;
    r.params["atom_weight"] = 1.0 - beta;
    r.params["boxcar_halfwidth"] = 1.5 * t;
  }
  finish(r, raw);
  return r;
}

BoundResult unimodal_absolute_tail_bound(double t, double mu_x) {
  require(std::isfinite(t) && t > 0.0, "absolute tail bound requires t > 0");
  require(std::isfinite(mu_x), "absolute tail bound requires finite mu_x");
  BoundResult r;
  r.direction = Direction::Upper;
  r.params["t"] = t;
  r.params["mu_x"] = mu_x;
  r.params["threshold"] = t * std::sqrt(1.0 + mu_x * mu_x);
  double raw;
  if (t < consts::symmetric_junction()) {
    r.branch = Branch::Linear;
    raw = 1.0 - t / consts::sqrt3();
  } else {
    r.branch = Branch::Quadratic;
    raw = 4.0 / (9.0 * t * t);
  }
  finish(r, raw);
  return r;
}

RootSolve solve_extremal_u(double t) {
  require(std::isfinite(t) && t > consts::one_sided_junction(),
          "root solve requires t > 4/sqrt(3)");
  // The cubic residual never changes sign in u (it is a squared factor
  // times a positive one), so bisection runs on the equivalent equation
  // u^2/sqrt(u^2-1) = t, which crosses zero exactly once on the bracket.
  const auto g = [t](double u) { return u * u / std::sqrt(u * u - 1.0) - t; };
  double lo = consts::symmetric_junction() + 1e-12;
  double hi = t;
  double glo = g(lo), ghi = g(hi);
  if (!(glo < 0.0 && ghi > 0.0))
    throw ConvergenceFailure("extremal-u bracket does not sign-change");

  RootSolve rs;
  rs.t = t;
  rs.bracket = {lo, hi};
  int iters = 0;
  while (hi - lo > 1e-15 * hi && iters < 200) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    ++iters;
    if (gm == 0.0) {
      lo = hi = mid;
      break;
    }
    (gm < 0.0 ? lo : hi) = mid;
  }
  double u = 0.5 * (lo + hi);
  // One secant step on the tight bracket sharpens the last bits.
  const double ga = g(lo), gb = g(hi);
  if (gb != ga) {
    const double sec = lo - ga * (hi - lo) / (gb - ga);
    if (sec > lo && sec < hi) u = sec;
    ++iters;
  }
  rs.u = u;
  rs.iterations = iters;
  rs.residual = tail_cubic_residual(t, u);
  return rs;
}

double one_sided_tail_bound_given_mean(double t, double mu_x) {
  require(std::isfinite(t) && t > 0.0, "tail bound requires t > 0");
  require(std::isfinite(mu_x), "tail bound requires finite mean");
  const double scale = std::sqrt(1.0 + mu_x * mu_x);
  if (t < consts::symmetric_junction() * scale)
    return clamp01(1.0 - t / (consts::sqrt3() * scale));
  return clamp01(4.0 * (1.0 + mu_x * mu_x) / (9.0 * t * t));
}

BoundResult one_sided_tail_bound(double t) {
  require(std::isfinite(t) && t > 0.0, "one-sided tail bound requires t > 0");
  BoundResult r;
  r.direction = Direction::Upper;
  r.params["t"] = t;
  double raw;
  if (t <= consts::one_sided_junction()) {
    r.branch = Branch::Linear;
    raw = 1.0 - t / (2.0 * consts::sqrt3());
    r.params["mu_x"] = consts::sqrt3();
    r.params["flat_width"] = 2.0 * consts::sqrt3();
  } else {
    r.branch = Branch::Quadratic;
    const RootSolve rs = solve_extremal_u(t);
    const double u = rs.u;
    raw = 4.0 * u * u / (9.0 * t * t * (u * u - 1.0));
    r.params["u"] = u;
    r.params["mu_x"] = 1.0 / std::sqrt(u * u - 1.0);
    r.params["root_residual"] = rs.residual;
    r.params["root_iterations"] = static_cast<double>(rs.iterations);
  }
  finish(r, raw);
  return r;
}

BoundResult shift_lower_bound(double mu) {
  require(std::isfinite(mu), "shift lower bound requires finite mu");
  BoundResult r;
  r.direction = Direction::Lower;
  r.params["mu"] = mu;
  r.params["mode_shift"] = std::sqrt(2.0) * mode_shift_constant();  // sqrt(6)
  const double s6 = consts::sqrt6();
  r.params["s"] = (mu - s6) / std::sqrt(2.0);
  double raw;
  if (mu < s6) {
    r.branch = Branch::Vacuous;
    raw = 0.0;
  } else if (mu <= consts::shift_lower_junction()) {
    r.branch = Branch::Linear;
    raw = (mu - s6) / (2.0 * s6);
  } else {
    r.branch = Branch::Quadratic;
    const double d = mu - s6;
    raw = 1.0 - 32.0 / (9.0 * d * d);
  }
  finish(r, raw);
  return r;
}

BoundResult bounded_density_upper_bound(double b, double mu) {
  require(std::isfinite(b) && b > 0.0, "bounded-density bound requires b > 0");
  require(std::isfinite(mu) && mu >= 0.0, "bounded-density bound requires mu >= 0");
  BoundResult r;
  r.direction = Direction::Upper;
  const double bm = b * mu;
  r.params["b"] = b;
  r.params["mu"] = mu;
  r.params["b_mu"] = bm;
  double raw;
  if (bm >= 1.0) {
    r.branch = Branch::Saturated;
    raw = 1.0;
  } else {
    r.branch = Branch::Quadratic;
    raw = bm + 0.5 * (1.0 - bm * bm);
  }
  finish(r, raw);
  return r;
}

double mode_shift_constant() { return consts::sqrt3(); }

}  // namespace rocbounds
