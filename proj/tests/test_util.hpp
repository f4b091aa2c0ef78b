#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "rocbounds/extremal.hpp"

namespace testutil {

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

// Composite-Simpson moment oracle over the absolutely continuous part plus
// the atom contribution. Independent of the closed-form mean()/variance().
inline double quadrature_moment(const rocbounds::ExtremalDistribution& d, int power) {
  const int panels = 128;  // Simpson is exact for x^2 against a flat density
  double total = (power == 0) ? d.atom_weight() : 0.0;
  for (const auto& c : d.components()) {
    const double h = (c.hi - c.lo) / panels;
    double acc = 0.0;
    for (int i = 0; i < panels; ++i) {
      const double a = c.lo + i * h;
      const double m = a + 0.5 * h;
      const double b = a + h;
      const auto g = [&](double x) { return std::pow(x, power) * c.height(); };
      acc += h / 6.0 * (g(a) + 4.0 * g(m) + g(b));
    }
    total += acc;
  }
  return total;
}

inline double quadrature_variance(const rocbounds::ExtremalDistribution& d) {
  const double m1 = quadrature_moment(d, 1);
  return quadrature_moment(d, 2) - m1 * m1;
}

// Kolmogorov-Smirnov distance between a sample and the closed-form CDF.
// Tied draws (the atom) are compared as one block, with the left limit
// adjusted at the atom.
inline double ks_distance(std::vector<double> sample,
                          const rocbounds::ExtremalDistribution& d) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double dist = 0.0;
  std::size_t i = 0;
  while (i < sample.size()) {
    std::size_t j = i;
    while (j < sample.size() && sample[j] == sample[i]) ++j;
    const double x = sample[i];
    const double f_right = d.cdf(x);
    const double f_left = f_right - (x == 0.0 ? d.atom_weight() : 0.0);
    dist = std::max(dist, std::abs(static_cast<double>(j) / n - f_right));
    dist = std::max(dist, std::abs(static_cast<double>(i) / n - f_left));
    i = j;
  }
  return dist;
}

}  // namespace testutil
