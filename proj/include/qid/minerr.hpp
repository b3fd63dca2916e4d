#pragma once

#include "qid/matrix.hpp"
#include "qid/scenarios.hpp"

#include <vector>

namespace qid {

struct MinErrResult {
    double p_correct = 0.0;
    ComplexMatrix pi1;  // projector onto the negative eigenspace
    std::vector<double> negative_eigenvalues;
};

/// Two-state minimum-error measurement: projects onto the negative
/// eigenspace of eta2*rho2 - eta1*rho1 and returns
/// p_correct = eta2 - Tr[(eta2*rho2 - eta1*rho1) * pi1]. For unit-trace
/// inputs this is the usual optimal probability of a correct decision.
MinErrResult helstrom(const ComplexMatrix& rho1, const ComplexMatrix& rho2,
                      double eta1);

/// Closed-form maximum probability of correctly identifying one known and
/// one unknown state, priors (eta1, 1-eta1), eta1 belonging to the known
/// state.
double pc_one_known(std::size_t d, double eta1);

/// Closed-form maximum for two unknown states.
double pc_two_unknown(std::size_t d, double eta1);

/// Detection operator for the known state on the full d^2-dimensional
/// space; rank d-1 below the eigenvalue crossing at eta1 = 2/(d+3), rank d
/// above it.
ComplexMatrix pi1_full_one_known(std::size_t d, double eta1);

/// Eigendecomposition route evaluated on the full-space operators.
double pc_oracle_full(const Scenario& scenario);

/// Eigendecomposition route on the reduced span space: the optimal
/// projector is read off the reduced operators, then evaluated against the
/// co-moving averages of rho_adapted, which restores the ambient-d value.
double pc_oracle_reduced(const Scenario& scenario);

}  // namespace qid
