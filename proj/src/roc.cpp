#include "rocbounds/roc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rocbounds {

EmpiricalSample::EmpiricalSample(std::vector<double> v, SampleLabel l)
    : values(std::move(v)), label(l) {
  if (values.empty())
    throw std::invalid_argument("empirical sample must be nonempty");
  for (double x : values)
    if (!std::isfinite(x))
      throw std::invalid_argument("empirical sample contains a non-finite value");
}

double threshold_of_alpha(const EmpiricalSample& s0, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must lie strictly in (0,1)");
  std::vector<double> sorted = s0.values;
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  auto k = static_cast<std::size_t>(std::ceil(n * (1.0 - alpha)));
  k = std::clamp<std::size_t>(k, 1, sorted.size());
  return sorted[k - 1];
}

RocCurve roc_curve(const EmpiricalSample& s0, const EmpiricalSample& s1) {
  std::vector<double> thresholds = s0.values;
  thresholds.insert(thresholds.end(), s1.values.begin(), s1.values.end());
  std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  std::vector<double> d0 = s0.values, d1 = s1.values;
  std::sort(d0.begin(), d0.end(), std::greater<>());
  std::sort(d1.begin(), d1.end(), std::greater<>());
  const double n0 = static_cast<double>(d0.size());
  const double n1 = static_cast<double>(d1.size());

  RocCurve curve;
  curve.points.push_back({0.0, 0.0});
  std::size_t i0 = 0, i1 = 0;
  for (double c : thresholds) {
    while (i0 < d0.size() && d0[i0] >= c) ++i0;
    while (i1 < d1.size() && d1[i1] >= c) ++i1;
    curve.points.push_back({static_cast<double>(i0) / n0,
                            static_cast<double>(i1) / n1});
  }

  double auc = 0.0;
  for (std::size_t i = 0; i + 1 < curve.points.size(); ++i) {
    const auto& a = curve.points[i];
    const auto& b = curve.points[i + 1];
    auc += (b.alpha - a.alpha) * 0.5 * (a.power + b.power);
  }
  curve.auc_trapezoid = auc;
  return curve;
}

double auc_mann_whitney(const EmpiricalSample& s0, const EmpiricalSample& s1) {
  const std::size_t n0 = s0.values.size();
  const std::size_t n1 = s1.values.size();
  if (n0 == 0 || n1 == 0)
    throw std::invalid_argument("both samples must be nonempty");

  struct Tagged {
    double value;
    bool class1;
  };
  std::vector<Tagged> all;
  all.reserve(n0 + n1);
  for (double x : s0.values) all.push_back({x, false});
  for (double x : s1.values) all.push_back({x, true});
  std::sort(all.begin(), all.end(),
            [](const Tagged& a, const Tagged& b) { return a.value < b.value; });

  // Midranks handle ties, which is exactly the half-weight convention.
  double rank_sum1 = 0.0;
  std::size_t i = 0;
  while (i < all.size()) {
    std::size_t j = i;
    while (j < all.size() && all[j].value == all[i].value) ++j;
    const double midrank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
    for (std::size_t k = i; k < j; ++k)
      if (all[k].class1) rank_sum1 += midrank;
    i = j;
  }
  const double u1 =
      rank_sum1 - 0.5 * static_cast<double>(n1) * (static_cast<double>(n1) + 1.0);
  return u1 / (static_cast<double>(n0) * static_cast<double>(n1));
}

}  // namespace rocbounds
