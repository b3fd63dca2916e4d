#pragma once

#include "qid/haar.hpp"
#include "qid/minerr.hpp"
#include "qid/scenarios.hpp"
#include "qid/unamb.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qid {

/// One named verification outcome. `observed` is the measured deviation (or
/// normalized statistic) that was compared against `tolerance`.
struct CheckResult {
    std::string name;
    bool passed = false;
    double observed = 0.0;
    double tolerance = 0.0;
};

enum class VerifyLevel { Quick, Full };

/// Monte Carlo estimate of the minimum-error success probability: per draw,
/// the joint states are expressed in the orthonormal basis their own span
/// defines and scored against the fixed reduced-space detection operator.
MonteCarloReport mc_minerr(const Scenario& scenario, std::uint64_t samples,
                           std::uint64_t seed);

/// Monte Carlo estimate of the unambiguous success probability for a fixed
/// reduced-space measurement, same co-moving-basis construction.
MonteCarloReport mc_unamb(const Scenario& scenario,
                          const UnambiguousMeasurement& meas,
                          std::uint64_t samples, std::uint64_t seed);

/// Check groups, one per family of guarantees.
std::vector<CheckResult> check_moment_identities(std::uint64_t seed);
std::vector<CheckResult> check_minerr_oracles(VerifyLevel level);
std::vector<CheckResult> check_minerr_spot_and_limits();
std::vector<CheckResult> check_unambiguous_constraints();
std::vector<CheckResult> check_alpha_optimality();
std::vector<CheckResult> check_n_state_formula();
std::vector<CheckResult> check_consistency_identities();
std::vector<CheckResult> check_gram_structure();
std::vector<CheckResult> check_unambiguous_monte_carlo(std::uint64_t seed);
std::vector<CheckResult> check_minerr_monte_carlo(std::uint64_t seed);

/// Full suite. Quick level skips every Monte Carlo group and caps oracle
/// grids at d = 4; Full runs everything at 10^5 samples.
std::vector<CheckResult> run_checks(VerifyLevel level, std::uint64_t seed);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace qid
