#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rocbounds {

/// Convention for the upper tail at a point carrying mass:
/// Gt computes P(X > t), Ge computes P(X >= t). The two differ only
/// at atoms of the distribution.
enum class TailConvention { Gt, Ge };

/// Uniform density on the open interval (lo, hi) carrying `weight`
/// of the total probability mass.
struct BoxcarComponent {
  double lo = 0.0;
  double hi = 0.0;
  double weight = 0.0;

  double width() const { return hi - lo; }
  double height() const { return weight / (hi - lo); }
  double midpoint() const { return 0.5 * (lo + hi); }
};

/// Finite mixture of an optional point mass at 0 and boxcar components.
/// All extremal constructions in this library are instances of this class.
/// Values are immutable after construction; every method is const and safe
/// to call concurrently.
class ExtremalDistribution {
 public:
  /// Point mass at 0.
  ExtremalDistribution();

  /// Throws std::invalid_argument unless `atom_weight` is in [0,1], each
  /// component has lo < hi and weight in (0,1], and the total mass is 1
  /// within 1e-12. Components are kept sorted by (lo, hi).
  ExtremalDistribution(double atom_weight, std::vector<BoxcarComponent> components);

  double atom_weight() const { return atom_weight_; }
  const std::vector<BoxcarComponent>& components() const { return components_; }
  bool has_atom() const { return atom_weight_ > 0.0; }

  double mean() const;
  double second_moment() const;
  double variance() const;
  double support_lo() const;
  double support_hi() const;

  /// Density of the absolutely continuous part at x (atoms excluded).
  double density(double x) const;
  double density_sup() const;

  /// P(X <= x), right-continuous.
  double cdf(double x) const;

  /// Upper tail at t under the selected convention.
  double tail(double t, TailConvention conv = TailConvention::Gt) const;

  /// Generalized inverse CDF for u in [0, 1]. Atom mass maps to exactly 0.
  double quantile(double u) const;

  /// True when the density (and atom) is symmetric about 0, checked on the
  /// component breakpoint partition with absolute tolerance `tol` scaled by
  /// the density sup.
  bool is_symmetric(double tol = 1e-9) const;

 private:
  double atom_weight_;
  std::vector<BoxcarComponent> components_;
};

/// Symmetric flat density 1/(2*sqrt(3)) on (-sqrt(3), sqrt(3)):
/// the variance-1 symmetric boxcar attaining the linear tail branch.
ExtremalDistribution make_symmetric_flat();

/// Atom-plus-boxcar mixture attaining the quadratic symmetric tail branch
/// at threshold t: weight 4/(3 t^2) on the boxcar (-3t/2, 3t/2), the rest
/// at 0. Requires t > 2/sqrt(3); variance is 1 by construction.
ExtremalDistribution make_symmetric_extremal(double t);

/// One-sided extremal with family parameter u >= 2/sqrt(3): atom of mass
/// 1 - 4/(3 u^2) at 0 plus a boxcar on (0, 3 u^2 / (2 sqrt(u^2 - 1))).
/// Variance 1, mean 1/sqrt(u^2 - 1).
ExtremalDistribution make_one_sided_extremal(double u);

/// Uniform density of height b on (-1/(2b), 1/(2b)); requires b > 0.
ExtremalDistribution make_bounded_uniform(double b);

/// Free-function form of ExtremalDistribution::tail.
double tail_prob(const ExtremalDistribution& d, double t,
                 TailConvention conv = TailConvention::Gt);

/// Precomputed piecewise-linear inverse CDF. Building the table once makes
/// tight sampling loops cheap; operator() maps u in [0,1] to a quantile,
/// with atom mass mapping to exactly 0.
class QuantileTable {
 public:
  explicit QuantileTable(const ExtremalDistribution& d);
  double operator()(double u) const;

 private:
  struct Piece {
    double f_lo, f_hi;
    double x_lo, x_hi;
    bool atom;
  };
  std::vector<Piece> pieces_;
};

/// n i.i.d. draws by inversion; deterministic for a given seed and
/// identical across platforms (raw 53-bit uniforms, no std distributions).
/// Requires n >= 1.
std::vector<double> sample(const ExtremalDistribution& d, std::size_t n,
                           std::uint64_t seed);

/// Tabulated density on strictly increasing abscissae.
struct DensityGrid {
  std::vector<double> xs;
  std::vector<double> fs;
  bool normalized = false;

  /// Throws std::invalid_argument on malformed grids; when `normalized` is
  /// set, additionally requires the trapezoid integral to be 1 within 1e-6.
  void validate() const;
};

/// Discrete log-concavity predicate: true iff the support {f > 0} has no
/// interior zeros and the slopes of ln f are nonincreasing within
/// 1e-9 * local scale. Requires at least 3 positive points.
bool is_log_concave(const DensityGrid& g);

}  // namespace rocbounds
