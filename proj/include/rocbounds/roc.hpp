#pragma once

#include <vector>

namespace rocbounds {

enum class SampleLabel { Class0, Class1 };

/// Finite list of observations for one class. Class0 is the no-signal
/// reference, Class1 the signal class.
struct EmpiricalSample {
  std::vector<double> values;
  SampleLabel label = SampleLabel::Class0;

  EmpiricalSample() = default;
  /// Throws std::invalid_argument on empty samples or non-finite values.
  EmpiricalSample(std::vector<double> v, SampleLabel l);
};

struct RocPoint {
  double alpha = 0.0;  // false-positive rate
  double power = 0.0;  // true-positive rate
};

/// Step ROC evaluated at every distinct observed threshold, plus the
/// trapezoidal area under it. Points are sorted by alpha and run from
/// (0, .) to (1, 1).
struct RocCurve {
  std::vector<RocPoint> points;
  double auc_trapezoid = 0.0;
};

/// Decision threshold at false-positive level alpha on the plug-in upper
/// tail of s0: the largest observed value x with P(X0 > x) still above
/// alpha, i.e. the ceil(n*(1-alpha))-th order statistic.
/// Requires alpha strictly inside (0, 1).
double threshold_of_alpha(const EmpiricalSample& s0, double alpha);

/// Empirical ROC of the threshold tests "value >= c" over all distinct
/// observed c. Tied thresholds produce diagonal segments, which the
/// trapezoid rule bridges with half weight.
RocCurve roc_curve(const EmpiricalSample& s0, const EmpiricalSample& s1);

/// (#{x0 < x1} + #{x0 = x1}/2) / (n0*n1), computed in O(n log n) by
/// midrank sums. Equals the ROC trapezoid area exactly.
double auc_mann_whitney(const EmpiricalSample& s0, const EmpiricalSample& s1);

}  // namespace rocbounds
