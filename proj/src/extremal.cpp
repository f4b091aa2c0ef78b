#include "rocbounds/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace rocbounds {

namespace {

constexpr double kMassTol = 1e-12;

double sqrt3() { return std::sqrt(3.0); }

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

ExtremalDistribution::ExtremalDistribution() : atom_weight_(1.0) {}

ExtremalDistribution::ExtremalDistribution(double atom_weight,
                                           std::vector<BoxcarComponent> components)
    : atom_weight_(atom_weight), components_(std::move(components)) {
  // Snap away constructor round-off before validating.
  if (atom_weight_ < 0.0 && atom_weight_ > -1e-13) atom_weight_ = 0.0;
  require(std::isfinite(atom_weight_) && atom_weight_ >= 0.0 && atom_weight_ <= 1.0,
          "atom weight must lie in [0,1]");
  double total = atom_weight_;
  for (auto& c : components_) {
    require(std::isfinite(c.lo) && std::isfinite(c.hi) && c.lo < c.hi,
            "boxcar component needs lo < hi");
    if (c.weight > 1.0 && c.weight < 1.0 + 1e-13) c.weight = 1.0;
    require(std::isfinite(c.weight) && c.weight > 0.0 && c.weight <= 1.0,
            "boxcar weight must lie in (0,1]");
    total += c.weight;
  }
  require(std::abs(total - 1.0) <= kMassTol,
          "atom and component weights must sum to 1");
  std::sort(components_.begin(), components_.end(),
            [](const BoxcarComponent& a, const BoxcarComponent& b) {
              return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
            });
}

double ExtremalDistribution::mean() const {
  double m = 0.0;
  for (const auto& c : components_) m += c.weight * c.midpoint();
  return m;
}

double ExtremalDistribution::second_moment() const {
  double m2 = 0.0;
  for (const auto& c : components_)
    m2 += c.weight * (c.lo * c.lo + c.lo * c.hi + c.hi * c.hi) / 3.0;
  return m2;
}

double ExtremalDistribution::variance() const {
  const double m = mean();
  return second_moment() - m * m;
}

double ExtremalDistribution::support_lo() const {
  double lo = has_atom() ? 0.0 : std::numeric_limits<double>::infinity();
  for (const auto& c : components_) lo = std::min(lo, c.lo);
  return lo;
}

double ExtremalDistribution::support_hi() const {
  double hi = has_atom() ? 0.0 : -std::numeric_limits<double>::infinity();
  for (const auto& c : components_) hi = std::max(hi, c.hi);
  return hi;
}

double ExtremalDistribution::density(double x) const {
  double f = 0.0;
  for (const auto& c : components_)
    if (x > c.lo && x < c.hi) f += c.height();
  return f;
}

double ExtremalDistribution::density_sup() const {
  // The density is piecewise constant with breakpoints at component
  // endpoints, so probing segment midpoints is exact.
  std::vector<double> bps;
  for (const auto& c : components_) {
    bps.push_back(c.lo);
    bps.push_back(c.hi);
  }
  std::sort(bps.begin(), bps.end());
  double sup = 0.0;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i)
    sup = std::max(sup, density(0.5 * (bps[i] + bps[i + 1])));
  return sup;
}

double ExtremalDistribution::cdf(double x) const {
  if (!std::isfinite(x)) return x > 0 ? 1.0 : 0.0;
  double c = (x >= 0.0) ? atom_weight_ : 0.0;
  for (const auto& b : components_) {
    if (x <= b.lo) continue;
    c += (x >= b.hi) ? b.weight : b.weight * (x - b.lo) / (b.hi - b.lo);
  }
  return c;
}

double ExtremalDistribution::tail(double t, TailConvention conv) const {
  double p = 1.0 - cdf(t);
  if (conv == TailConvention::Ge && t == 0.0) p += atom_weight_;
  return p;
}

double ExtremalDistribution::quantile(double u) const {
  require(u >= 0.0 && u <= 1.0, "quantile argument must lie in [0,1]");
  return QuantileTable(*this)(u);
}

bool ExtremalDistribution::is_symmetric(double tol) const {
  std::vector<double> bps;
  for (const auto& c : components_) {
    bps.push_back(c.lo);
    bps.push_back(c.hi);
    bps.push_back(-c.lo);
    bps.push_back(-c.hi);
  }
  if (bps.empty()) return true;  // pure atom at 0
  std::sort(bps.begin(), bps.end());
  const double scale = 1.0 + density_sup();
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    const double m = 0.5 * (bps[i] + bps[i + 1]);
    if (std::abs(density(m) - density(-m)) > tol * scale) return false;
  }
  return true;
}

ExtremalDistribution make_symmetric_flat() {
  const double a = sqrt3();
  return ExtremalDistribution(0.0, {{-a, a, 1.0}});
}

ExtremalDistribution make_symmetric_extremal(double t) {
  require(std::isfinite(t) && t > 2.0 / sqrt3(),
          "symmetric extremal requires t > 2/sqrt(3)");
  const double beta = 4.0 / (3.0 * t * t);
  return ExtremalDistribution(1.0 - beta, {{-1.5 * t, 1.5 * t, beta}});
}

ExtremalDistribution make_one_sided_extremal(double u) {
  require(std::isfinite(u) && u >= 2.0 / sqrt3(),
          "one-sided extremal requires u >= 2/sqrt(3)");
  const double beta = 4.0 / (3.0 * u * u);
  const double hi = 1.5 * u * u / std::sqrt(u * u - 1.0);
  return ExtremalDistribution(1.0 - beta, {{0.0, hi, beta}});
}

ExtremalDistribution make_bounded_uniform(double b) {
  require(std::isfinite(b) && b > 0.0, "bounded uniform requires b > 0");
  const double half = 0.5 / b;
  return ExtremalDistribution(0.0, {{-half, half, 1.0}});
}

double tail_prob(const ExtremalDistribution& d, double t, TailConvention conv) {
  return d.tail(t, conv);
}

QuantileTable::QuantileTable(const ExtremalDistribution& d) {
  std::vector<double> bps;
  for (const auto& c : d.components()) {
    bps.push_back(c.lo);
    bps.push_back(c.hi);
  }
  if (d.has_atom()) bps.push_back(0.0);
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

  double f = 0.0;
  for (std::size_t i = 0; i < bps.size(); ++i) {
    if (d.has_atom() && bps[i] == 0.0) {
      pieces_.push_back({f, f + d.atom_weight(), 0.0, 0.0, true});
      f += d.atom_weight();
    }
    if (i + 1 == bps.size()) break;
    const double x0 = bps[i], x1 = bps[i + 1];
    const double dens = d.density(0.5 * (x0 + x1));
    if (dens > 0.0) {
      const double df = dens * (x1 - x0);
      pieces_.push_back({f, f + df, x0, x1, false});
      f += df;
    }
  }
  if (!pieces_.empty()) pieces_.back().f_hi = std::max(pieces_.back().f_hi, 1.0);
}

double QuantileTable::operator()(double u) const {
  if (pieces_.empty()) return 0.0;
  auto it = std::lower_bound(
      pieces_.begin(), pieces_.end(), u,
      [](const Piece& p, double v) { return p.f_hi < v; });
  if (it == pieces_.end()) --it;
  if (it->atom) return 0.0;
  const double span = it->f_hi - it->f_lo;
  if (span <= 0.0) return it->x_lo;
  const double w = std::clamp((u - it->f_lo) / span, 0.0, 1.0);
  return it->x_lo + w * (it->x_hi - it->x_lo);
}

std::vector<double> sample(const ExtremalDistribution& d, std::size_t n,
                           std::uint64_t seed) {
  require(n >= 1, "sample size must be at least 1");
  QuantileTable table(d);
  std::mt19937_64 rng(seed);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    out.push_back(table(u));
  }
  return out;
}

void DensityGrid::validate() const {
  require(xs.size() == fs.size(), "density grid: xs and fs sizes differ");
  require(xs.size() >= 2, "density grid: need at least 2 points");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    require(std::isfinite(xs[i]) && std::isfinite(fs[i]),
            "density grid: non-finite entry");
    require(fs[i] >= 0.0, "density grid: negative density");
    if (i > 0) require(xs[i] > xs[i - 1], "density grid: xs not increasing");
  }
  if (normalized) {
    double integral = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
      integral += 0.5 * (fs[i] + fs[i + 1]) * (xs[i + 1] - xs[i]);
    require(std::abs(integral - 1.0) <= 1e-6,
            "density grid: normalized flag set but integral is not 1");
  }
}

bool is_log_concave(const DensityGrid& g) {
  g.validate();
  std::size_t first = g.xs.size(), last = 0, positive = 0;
  for (std::size_t i = 0; i < g.xs.size(); ++i) {
    if (g.fs[i] > 0.0) {
      if (positive == 0) first = i;
      last = i;
      ++positive;
    }
  }
  if (positive < 3)
    throw std::invalid_argument("log-concavity test needs at least 3 positive points");
  // A log-concave density has interval support: a zero strictly inside the
  // positive range is already a violation.
  for (std::size_t i = first; i <= last; ++i)
    if (g.fs[i] <= 0.0) return false;

  double prev_slope = 0.0;
  bool have_prev = false;
  for (std::size_t i = first; i < last; ++i) {
    const double slope = (std::log(g.fs[i + 1]) - std::log(g.fs[i])) /
                         (g.xs[i + 1] - g.xs[i]);
    if (have_prev) {
      const double scale = std::max({1.0, std::abs(prev_slope), std::abs(slope)});
      if (slope - prev_slope > 1e-9 * scale) return false;
    }
    prev_slope = slope;
    have_prev = true;
  }
  return true;
}

}  // namespace rocbounds
