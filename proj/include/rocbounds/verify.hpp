#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rocbounds/extremal.hpp"

namespace rocbounds {

/// Finite union of disjoint open intervals, kept sorted.
struct IntervalSet {
  std::vector<std::pair<double, double>> intervals;

  /// Sorts, validates each lo < hi and pairwise disjointness.
  static IntervalSet from(std::vector<std::pair<double, double>> ivals);
  double measure() const;
  /// Symmetric rearrangement: the centered open interval of equal measure.
  IntervalSet centered() const;
};

/// Exact P(U1 + U2 <= t) for independent uniforms on (lo1,hi1), (lo2,hi2).
double uniform_sum_cdf(double lo1, double hi1, double lo2, double hi2, double t);

/// P(X <= Y + mu) for independent mixtures, by closed-form piecewise
/// integration over every atom/boxcar component pair. Exact to rounding.
double prob_leq_shift(const ExtremalDistribution& dx,
                      const ExtremalDistribution& dy, double mu);

/// Mixture of d and its reflection: the atom stays at 0, each boxcar is
/// split into itself and its mirror at half weight (equal intervals merged).
/// Output variance equals variance(d) + mean(d)^2.
ExtremalDistribution symmetrize(const ExtremalDistribution& d);

/// Sweep resolution: number of grid intervals per free parameter. Doubling
/// the resolution refines the grid in place (nodes are nested), so best
/// values are monotone under refinement.
struct SweepGrid {
  std::size_t resolution = 1000;
};

struct SweepReport {
  double target = 0.0;      // threshold t the sweep maximized at
  double best_value = 0.0;  // max tail probability over the family grid
  double bound_value = 0.0; // closed-form bound at the same threshold
  double gap = 0.0;         // bound_value - best_value
  std::map<std::string, double> best_params;
  std::size_t configs = 0;
};

/// Maximizes P(X >= t) over the variance-1 symmetric extreme-point grid:
/// atom-plus-boxcar mixtures and two-boxcar mixtures. Reports the max
/// against symmetric_unimodal_tail_bound(t).
SweepReport sweep_symmetric_tail(double t, const SweepGrid& grid = {});

/// Maximizes P(X > t) over one-sided mode-0 variance-1 mixtures. Up to the
/// branch junction the families are unconstrained in the mean; beyond it
/// the class is additionally pinned to the mean of the sharp extremal at t
/// (the quadratic branch is a per-mean bound), and three-component
/// atom-plus-two-boxcar mixtures join the grid. Reports the max against
/// one_sided_tail_bound(t).
SweepReport sweep_one_sided_tail(double t, const SweepGrid& grid = {});

/// Both sides of the rearrangement inequality for indicator functions:
/// lhs = integral I_a(x) I_b(x-y) I_c(y) dx dy over the given sets,
/// rhs = the same with each set replaced by its centered interval.
/// Computed exactly as sums of clipped trapezoid integrals.
std::pair<double, double> riesz_rearrangement_check(const IntervalSet& a,
                                                    const IntervalSet& b,
                                                    const IntervalSet& c);

/// Both sides of P(Y0 <= Y1 + mu) = (1 + P(|Y1 - Y0| < mu)) / 2 for
/// independent symmetric atom-free mixtures. Throws std::invalid_argument
/// when an input carries an atom or is not symmetric.
std::pair<double, double> reflection_identity_check(
    const ExtremalDistribution& d0, const ExtremalDistribution& d1, double mu);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

/// Sampling estimate of P(X <= Y + mu) with binomial standard error.
/// Deterministic for a given seed. Requires n >= 1000.
MonteCarloEstimate monte_carlo_prob(const ExtremalDistribution& dx,
                                    const ExtremalDistribution& dy, double mu,
                                    std::size_t n, std::uint64_t seed);

}  // namespace rocbounds
