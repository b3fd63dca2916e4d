#pragma once

#include "qid/matrix.hpp"
#include "qid/scenarios.hpp"

#include <functional>
#include <vector>

namespace qid {

/// Unambiguous measurement on the reduced span space: detection operators
/// plus the inconclusive remainder. alpha1/alpha2 are set for the two-state
/// constructions and NaN otherwise.
struct UnambiguousMeasurement {
    TensorSpace space;
    std::vector<ComplexMatrix> detection;  // Pi_1 ... Pi_N'
    ComplexMatrix inconclusive;            // Pi_0
    double alpha1 = 0.0;
    double alpha2 = 0.0;
};

UnambiguousMeasurement one_known_measurement(std::size_t d, double eta1);
UnambiguousMeasurement two_unknown_measurement(double eta1);

/// Optimal alpha_1 for the one-known construction (three-branch rule).
double one_known_alpha1(std::size_t d, double eta1);
/// Optimal alpha_1 for the two-unknown construction (clamped stationary
/// point of eta1*alpha1 + eta2*alpha2(alpha1)).
double two_unknown_alpha1(double eta1);

/// Closed-form maximum success probabilities.
double ps_one_known(std::size_t d, double eta1);
double ps_two_unknown(std::size_t d, double eta1);
/// N equiprobable linearly independent unknown states, d >= N.
double ps_n_states(std::size_t n, std::size_t d);

/// Measurement identifying N equiprobable unknown states on the
/// N^(N+1)-dimensional reduced space. Supported for N in {2, 3, 4}; N = 5
/// would exceed the composite-dimension cap.
UnambiguousMeasurement n_states_measurement(std::size_t n);

/// Detection vector |pi_n^(k)>: |k> on reference slot n and an alternating
/// permutation sum over the remaining slots. 1-based n, 0-based k.
PureState n_state_pi(std::size_t n_states, std::size_t n, std::size_t k);

struct UnambiguousReport {
    double max_psd_violation = 0.0;           // most negative eigenvalue, flipped
    double max_completeness_violation = 0.0;  // residual of Pi_0 + sum = P
    double max_no_error_violation = 0.0;      // max entry of rho_n * Pi_m, m != n
    double p_correct_subspace = 0.0;          // sum eta_n Tr(rho_n Pi_n)
};

/// Checks positivity, completeness against the given projector of the
/// space, and the no-error condition against a density operator set.
UnambiguousReport verify_unambiguous(const UnambiguousMeasurement& meas,
                                     const DensityOperatorSet& rhos,
                                     const std::vector<double>& priors);

struct SweepResult {
    double arg = 0.0;
    double value = 0.0;
};

/// Golden-section maximum of a unimodal objective on [0, 1].
SweepResult alpha_sweep(const std::function<double(double)>& objective);

/// Joint probability that the identification succeeds and the state falls
/// into the span subspace, for the alpha-parameterized two-state
/// constructions (analytic trace values).
double pc_subspace_one_known(std::size_t d, double eta1, double alpha1);
double pc_subspace_two_unknown(std::size_t d, double eta1, double alpha1);

}  // namespace qid
