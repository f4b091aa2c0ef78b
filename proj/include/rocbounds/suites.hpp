#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rocbounds/extremal.hpp"

namespace rocbounds {

/// One checked property instance.
struct SuiteCase {
  std::string name;
  bool pass = false;
  double observed = 0.0;  // the quantity checked (gap, deviation, ...)
  double limit = 0.0;     // the limit it was checked against
  std::string detail;
};

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::vector<SuiteCase> cases;
};

struct SuiteOptions {
  std::size_t cases = 1000;     // random instances for case-count suites
  std::size_t mc_n = 1000000;   // Monte Carlo draws per config
  std::size_t grid = 1000;      // sweep resolution
  std::uint64_t seed = 20090467;
  double t_focus = 0.0;         // 0 = full grids; otherwise a single threshold
  TailConvention conv = TailConvention::Gt;
};

/// Names accepted by run_suites, in default execution order.
const std::vector<std::string>& all_suite_names();

/// Runs the named suites ("all" expands to every suite).
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const SuiteOptions& opts);

SuiteResult run_continuity_suite();
SuiteResult run_sharpness_suite(const SuiteOptions& opts);
SuiteResult run_riesz_suite(const SuiteOptions& opts);
SuiteResult run_reflection_suite(const SuiteOptions& opts);
SuiteResult run_sweep_suite(const SuiteOptions& opts);
SuiteResult run_montecarlo_suite(const SuiteOptions& opts);
SuiteResult run_bamber_suite(const SuiteOptions& opts);

/// Random symmetric atom-free boxcar mixture with density bounded by b
/// and total mass 1; used by the reflection/Monte-Carlo suites and tests.
ExtremalDistribution random_symmetric_bounded(std::mt19937_64& rng, double b);

/// Random mixture drawn from the library's constructor families.
ExtremalDistribution random_mixture(std::mt19937_64& rng);

}  // namespace rocbounds
