#pragma once

#include "qid/haar.hpp"
#include "qid/matrix.hpp"
#include "qid/spaces.hpp"

#include <vector>

namespace qid {

enum class ScenarioKind {
    OneKnownOneUnknown,  // state 1 known (probe |0>), state 2 unknown
    TwoUnknown,
    NUnknownEquiprobable,
};

/// One identification problem: which states are to be told apart, with what
/// priors, at which qudit dimension.
struct Scenario {
    ScenarioKind kind;
    std::size_t d = 0;        // ambient qudit dimension
    std::size_t n_refs = 0;   // N, number of reference qudits
    std::size_t n_states = 0; // N', number of candidate states
    std::size_t span_dim = 0; // D, dimension jointly spanned by the candidates
    std::vector<double> priors;

    static Scenario one_known(std::size_t d, double eta1);
    static Scenario two_unknown(std::size_t d, double eta1);
    static Scenario n_unknown(std::size_t n, std::size_t d);

    TensorSpace full_space() const { return {n_refs + 1, d}; }
    TensorSpace reduced_space() const { return {n_refs + 1, span_dim}; }
};

struct DensityOperatorSet {
    TensorSpace space;
    std::vector<ComplexMatrix> operators;  // rho_1 ... rho_N'
};

/// Joint probe+reference state |Psi_n> on the full composite space, for one
/// concrete draw of the unknown states. n is 1-based.
PureState joint_state(const Scenario& scenario,
                      const std::vector<PureState>& unknown_states,
                      std::size_t n);

/// Averaged density operators on the full d^(N+1)-dimensional space; each
/// has unit trace.
DensityOperatorSet rho_full(const Scenario& scenario);

/// The same operators projected onto the D^(N+1)-dimensional span subspace,
/// written in an abstract orthonormal basis. Traces fall below 1 for D < d.
DensityOperatorSet rho_reduced(const Scenario& scenario);

/// Haar average of the joint states taken coordinate-wise in the basis that
/// the sequential orthonormalization of the drawn states defines (the basis
/// co-moves with each draw). Unit trace; the trace against a fixed
/// reduced-space operator reproduces the averaged full-space value exactly.
/// Available for the two-state scenario kinds.
DensityOperatorSet rho_adapted(const Scenario& scenario);

/// First operator of rho_adapted, available for every scenario kind
/// (for the N-state family it is a diagonal product of per-state moments).
ComplexMatrix rho_adapted_first(const Scenario& scenario);

}  // namespace qid
