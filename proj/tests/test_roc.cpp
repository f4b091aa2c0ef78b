#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "rocbounds/extremal.hpp"
#include "rocbounds/roc.hpp"
#include "rocbounds/verify.hpp"
#include "test_util.hpp"

using namespace rocbounds;
using testutil::uniform_in;

TEST_CASE("empirical sample validation") {
  CHECK_THROWS_AS(EmpiricalSample({}, SampleLabel::Class0), std::invalid_argument);
  CHECK_THROWS_AS(EmpiricalSample({1.0, NAN}, SampleLabel::Class0), std::invalid_argument);
}

TEST_CASE("threshold at level alpha") {
  const EmpiricalSample s0({1, 2, 3, 4}, SampleLabel::Class0);
  CHECK(threshold_of_alpha(s0, 0.5) == 2.0);
  CHECK(threshold_of_alpha(s0, 1e-9) == 4.0);     // near-zero level: max
  CHECK(threshold_of_alpha(s0, 1.0 - 1e-9) == 1.0);  // near-one level: min's step edge
  CHECK(threshold_of_alpha(s0, 0.25) == 3.0);
  CHECK_THROWS_AS(threshold_of_alpha(s0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(threshold_of_alpha(s0, 1.0), std::invalid_argument);
}

TEST_CASE("roc curve worked examples") {
  {
    const EmpiricalSample s0({1, 3}, SampleLabel::Class0);
    const EmpiricalSample s1({2, 4}, SampleLabel::Class1);
    const auto curve = roc_curve(s0, s1);
    CHECK(curve.auc_trapezoid == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(auc_mann_whitney(s0, s1) == doctest::Approx(0.75).epsilon(1e-15));
  }
  {
    const EmpiricalSample s0({1, 2}, SampleLabel::Class0);
    const EmpiricalSample s1({3, 4}, SampleLabel::Class1);
    CHECK(roc_curve(s0, s1).auc_trapezoid == doctest::Approx(1.0));
    CHECK(auc_mann_whitney(s0, s1) == doctest::Approx(1.0));
  }
  {
    const EmpiricalSample same({0.3, 1.7, 2.9}, SampleLabel::Class0);
    CHECK(roc_curve(same, same).auc_trapezoid == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(auc_mann_whitney(same, same) == doctest::Approx(0.5).epsilon(1e-15));
  }
  {
    const EmpiricalSample a({5}, SampleLabel::Class0);
    const EmpiricalSample b({5}, SampleLabel::Class1);
    CHECK(auc_mann_whitney(a, b) == doctest::Approx(0.5));
    CHECK(roc_curve(a, b).auc_trapezoid == doctest::Approx(0.5));
  }
}

TEST_CASE("roc curve shape invariants") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<double> v0, v1;
    const int n0 = 1 + static_cast<int>(testutil::uniform01(rng) * 40);
    const int n1 = 1 + static_cast<int>(testutil::uniform01(rng) * 40);
    for (int i = 0; i < n0; ++i) v0.push_back(std::round(uniform_in(rng, -4, 4)));
    for (int i = 0; i < n1; ++i) v1.push_back(std::round(uniform_in(rng, -3, 5)));
    const auto curve = roc_curve(EmpiricalSample(v0, SampleLabel::Class0),
                                 EmpiricalSample(v1, SampleLabel::Class1));
    REQUIRE(curve.points.size() >= 2);
    CHECK(curve.points.front().alpha == 0.0);
    CHECK(curve.points.back().alpha == 1.0);
    CHECK(curve.points.back().power == 1.0);
    for (std::size_t i = 0; i + 1 < curve.points.size(); ++i) {
      CHECK(curve.points[i + 1].alpha >= curve.points[i].alpha);
      CHECK(curve.points[i + 1].power >= curve.points[i].power);
    }
    CHECK(curve.auc_trapezoid >= 0.0);
    CHECK(curve.auc_trapezoid <= 1.0);
  }
}

TEST_CASE("rank identity: trapezoid AUC equals the rank AUC, ties included") {
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<double> v0, v1;
    const int n0 = 1 + static_cast<int>(testutil::uniform01(rng) * 499);
    const int n1 = 1 + static_cast<int>(testutil::uniform01(rng) * 499);
    const bool force_ties = rep % 3 == 0;
    for (int i = 0; i < n0; ++i) {
      double x = uniform_in(rng, -10, 10);
      if (force_ties) x = std::round(x);
      v0.push_back(x);
    }
    for (int i = 0; i < n1; ++i) {
      double x = uniform_in(rng, -10, 10);
      if (force_ties) x = std::round(x);
      v1.push_back(x);
    }
    const EmpiricalSample s0(v0, SampleLabel::Class0);
    const EmpiricalSample s1(v1, SampleLabel::Class1);
    const double mw = auc_mann_whitney(s0, s1);
    CHECK(std::abs(mw - roc_curve(s0, s1).auc_trapezoid) <= 1e-12);
    CHECK(std::abs(mw + auc_mann_whitney(s1, s0) - 1.0) <= 1e-12);
  }
}

TEST_CASE("rank AUC is exactly invariant under strictly increasing maps") {
  std::mt19937_64 rng(21);
  std::vector<double> v0, v1;
  for (int i = 0; i < 200; ++i) v0.push_back(uniform_in(rng, -5, 5));
  for (int i = 0; i < 150; ++i) v1.push_back(uniform_in(rng, -4, 6));
  const double base = auc_mann_whitney(EmpiricalSample(v0, SampleLabel::Class0),
                                       EmpiricalSample(v1, SampleLabel::Class1));
  const auto apply = [&](double (*f)(double)) {
    auto w0 = v0, w1 = v1;
    for (auto& x : w0) x = f(x);
    for (auto& x : w1) x = f(x);
    return auc_mann_whitney(EmpiricalSample(w0, SampleLabel::Class0),
                            EmpiricalSample(w1, SampleLabel::Class1));
  };
  CHECK(apply([](double x) { return x * x * x; }) == base);
  CHECK(apply([](double x) { return std::atan(x); }) == base);
  CHECK(apply([](double x) { return std::exp(0.3 * x); }) == base);
}

TEST_CASE("sampled AUC converges to the closed-form shift probability") {
  // class0 ~ flat extremal, class1 ~ one-sided extremal shifted by mu
  const auto d0 = make_symmetric_flat();
  const auto d1 = make_one_sided_extremal(2.0);
  const double mu = 0.8;
  const double exact = prob_leq_shift(d0, d1, mu);

  const std::size_t n = 1000000;
  auto v0 = sample(d0, n, 101);
  auto v1 = sample(d1, n, 202);
  for (auto& x : v1) x += mu;
  const double auc = auc_mann_whitney(EmpiricalSample(v0, SampleLabel::Class0),
                                      EmpiricalSample(v1, SampleLabel::Class1));
  // Hanley-McNeil style standard error, conservative for equal-sized classes
  const double q1 = exact / (2.0 - exact), q2 = 2.0 * exact * exact / (1.0 + exact);
  const double var = (exact * (1.0 - exact) +
                      (n - 1.0) * (q1 - exact * exact) +
                      (n - 1.0) * (q2 - exact * exact)) /
                     (static_cast<double>(n) * static_cast<double>(n));
  CHECK(std::abs(auc - exact) < 3.0 * std::sqrt(var) + 1e-6);
}
