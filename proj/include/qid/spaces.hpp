#pragma once

#include "qid/haar.hpp"
#include "qid/matrix.hpp"

#include <span>
#include <vector>

namespace qid {

/// Composite space of one probe qudit (slot 0) and N reference qudits
/// (slots 1..N), each of local dimension d.
struct TensorSpace {
    std::size_t slots = 0;      // N + 1
    std::size_t local_dim = 0;  // d

    std::size_t total_dim() const;
};

/// Flat index with slot 0 most significant, matching the block ordering of
/// kron.
std::size_t composite_index(std::span<const std::size_t> slot_indices,
                            const TensorSpace& space);

/// Inverse of composite_index.
std::vector<std::size_t> slot_indices(std::size_t flat, const TensorSpace& space);

/// Orthonormal basis produced from a list of input states, vector j lying in
/// the span of inputs 1..j+1. `residuals[j]` is the squared norm removed at
/// step j (residuals[0] = 1 for the untouched first state).
struct OrthonormalBasis {
    std::size_t dim = 0;  // ambient d
    std::vector<PureState> vectors;
    std::vector<double> residuals;

    std::size_t size() const { return vectors.size(); }

    /// Coordinates of psi in this basis: (<b_0|psi>, ..., <b_{D-1}|psi>).
    std::vector<Complex> coefficients(const PureState& psi) const;
};

/// Sequential orthonormalization of linearly independent states. Throws
/// std::runtime_error naming the offending state when a residual norm drops
/// to dependence_tol or below.
OrthonormalBasis gram_schmidt(const std::vector<PureState>& states,
                              double dependence_tol = 1e-8);

/// Projector onto the symmetric subspace of two qudits of dimension d
/// (rank d(d+1)/2), assembled from |ii><ii| terms and symmetrized |ij>+|ji|
/// pair terms.
ComplexMatrix sym_projector(std::size_t d);

/// Full-space operator acting as `op` on the named slots (in the given
/// order) and as identity elsewhere.
ComplexMatrix embed(const ComplexMatrix& op,
                    std::span<const std::size_t> acting_slots,
                    const TensorSpace& space);

/// Tensor-power projector onto the span of the basis vectors in every slot;
/// trace D^(N+1).
ComplexMatrix subspace_projector(const OrthonormalBasis& basis,
                                 const TensorSpace& space);

}  // namespace qid
