#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace rocbounds {

enum class Branch { Linear, Quadratic, Saturated, Vacuous };
enum class Direction { Upper, Lower };

const char* to_string(Branch b);
const char* to_string(Direction d);
Branch branch_from_string(const std::string& s);
Direction direction_from_string(const std::string& s);

/// A bound value together with the active branch and the named reals that
/// produced it (family parameter u, extremal mean, attaining-mixture
/// descriptors, the pre-clamp value under key "raw_value", ...).
struct BoundResult {
  double value = 0.0;
  Branch branch = Branch::Linear;
  Direction direction = Direction::Upper;
  std::map<std::string, double> params;
};

/// Record of one threshold-to-family-parameter root solve.
struct RootSolve {
  double t = 0.0;
  double u = 0.0;
  double residual = 0.0;  // value of tail_cubic_residual(t, u)
  int iterations = 0;
  std::pair<double, double> bracket{0.0, 0.0};
};

class ConvergenceFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Frequently used irrational constants, computed at full precision.
namespace consts {
double sqrt3();
double sqrt6();
/// Junction of the symmetric tail bound branches, 2/sqrt(3).
double symmetric_junction();
/// Junction of the one-sided tail bound branches, 4/sqrt(3).
double one_sided_junction();
/// Junction of the shift lower bound branches, sqrt(6) + 4*sqrt(2/3).
double shift_lower_junction();
}  // namespace consts

/// t^3 - (3u^2 / (2 sqrt(u^2-1))) t^2 + ((u^4/(u^2-1))^{3/2}) / 2.
/// Zero exactly when t = u^2/sqrt(u^2-1); this ties the one-sided tail
/// threshold to the extremal family parameter.
double tail_cubic_residual(double t, double u);

/// Sharp upper bound on P(|X - m| > s) for continuous unimodal X with
/// mode m and E[(X-m)^2] = tau^2 (Gauss's inequality). Crossover at
/// s = 2*tau/sqrt(3), where the two branches agree.
BoundResult gauss_tail_bound(double s, double tau);

/// Sharp upper bound on P(X >= t) for symmetric unimodal unit-variance X:
/// 1/2 - t/(2 sqrt(3)) up to t = 2/sqrt(3), then 2/(9 t^2).
BoundResult symmetric_unimodal_tail_bound(double t);

/// Sharp upper bound on P(|X| > t sqrt(1 + mu_x^2)) for unimodal X with
/// mode 0, variance 1 and mean mu_x: twice the symmetric bound.
BoundResult unimodal_absolute_tail_bound(double t, double mu_x);

/// The unique family parameter u >= 2/sqrt(3) whose one-sided extremal has
/// its sharp threshold at t, i.e. the root of tail_cubic_residual(t, .).
/// Requires t > 4/sqrt(3). Throws ConvergenceFailure if the bracket fails
/// to sign-change (a numerics bug, not a caller error).
RootSolve solve_extremal_u(double t);

/// Upper bound on P(X > t) for unimodal X with mode 0, variance 1 and
/// mean mu_x: the two-branch bound with crossover at
/// 2 sqrt(1 + mu_x^2) / sqrt(3).
double one_sided_tail_bound_given_mean(double t, double mu_x);

/// One-sided tail bound at threshold t: the linear branch 1 - t/(2 sqrt(3))
/// up to t = 4/sqrt(3); beyond it, the sharp frontier value
/// 4 u^2 / (9 t^2 (u^2 - 1)) at u = solve_extremal_u(t), attained by
/// make_one_sided_extremal(u) whose mean is 1/sqrt(u^2 - 1).
BoundResult one_sided_tail_bound(double t);

/// Lower bound on P(X <= Y + mu) for independent zero-mean unit-variance
/// unimodal X, Y (one of them strong unimodal): 0 below sqrt(6) (vacuous),
/// then (mu - sqrt(6)) / (2 sqrt(6)), then 1 - 32 / (9 (mu - sqrt(6))^2).
BoundResult shift_lower_bound(double mu);

/// Upper bound on P(X <= Y + mu) for independent symmetric X, Y whose
/// densities are bounded by b: b*mu + (1 - (b*mu)^2)/2, saturating at 1
/// once b*mu >= 1. Attained by the height-b uniform pair.
BoundResult bounded_density_upper_bound(double b, double mu);

/// Mode-mean distance bound for unimodal unit-variance laws: sqrt(3).
/// Pins the worst-case mode shift inside shift_lower_bound.
double mode_shift_constant();

}  // namespace rocbounds
