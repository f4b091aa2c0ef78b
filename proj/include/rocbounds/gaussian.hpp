#pragma once

namespace rocbounds {

/// Complementary error function evaluated without libm's erfc: a stable
/// all-positive-term series below z = 1.5 and a Lentz continued fraction
/// above. Relative error is below 1e-14 over the double range, so the
/// normal CDF built on it carries absolute error well under 1e-12.
double erfc_internal(double z);

/// Standard normal CDF, Phi(x) = erfc(-x/sqrt(2)) / 2.
double normal_cdf(double x);

}  // namespace rocbounds
