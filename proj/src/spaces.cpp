#include "qid/spaces.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace qid {

std::size_t TensorSpace::total_dim() const {
    std::size_t dim = 1;
    for (std::size_t l = 0; l < slots; ++l) {
        if (dim > kMaxDim / local_dim) {
            throw std::length_error("TensorSpace: total dimension exceeds maximum");
        }
        dim *= local_dim;
    }
    return dim;
}

std::size_t composite_index(std::span<const std::size_t> slot_indices,
                            const TensorSpace& space) {
    if (slot_indices.size() != space.slots) {
        throw std::domain_error("composite_index: wrong number of slot indices");
    }
    std::size_t flat = 0;
    for (std::size_t idx : slot_indices) {
        if (idx >= space.local_dim) {
            throw std::domain_error("composite_index: slot index out of range");
        }
        flat = flat * space.local_dim + idx;
    }
    return flat;
}

std::vector<std::size_t> slot_indices(std::size_t flat, const TensorSpace& space) {
    std::vector<std::size_t> digits(space.slots);
    for (std::size_t l = space.slots; l-- > 0;) {
        digits[l] = flat % space.local_dim;
        flat /= space.local_dim;
    }
    return digits;
}

std::vector<Complex> OrthonormalBasis::coefficients(const PureState& psi) const {
    std::vector<Complex> c(vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j) c[j] = inner(vectors[j], psi);
    return c;
}

OrthonormalBasis gram_schmidt(const std::vector<PureState>& states,
                              double dependence_tol) {
    if (states.empty()) throw std::domain_error("gram_schmidt: empty input");
    const std::size_t d = states.front().dim;
    if (states.size() > d) {
        throw std::runtime_error("gram_schmidt: more states than dimensions");
    }
    OrthonormalBasis basis;
    basis.dim = d;
    for (std::size_t j = 0; j < states.size(); ++j) {
        if (states[j].dim != d) {
            throw std::domain_error("gram_schmidt: inconsistent state dimensions");
        }
        PureState v = states[j];
        for (const auto& b : basis.vectors) {
            const Complex c = inner(b, v);
            for (std::size_t i = 0; i < d; ++i) v.amplitudes[i] -= c * b.amplitudes[i];
        }
        const double n = v.norm();
        const double residual = n * n;
        if (j > 0 && residual <= dependence_tol) {
            throw std::runtime_error("gram_schmidt: state " + std::to_string(j + 1) +
                                     " is linearly dependent on its predecessors");
        }
        for (auto& a : v.amplitudes) a /= n;
        basis.vectors.push_back(std::move(v));
        basis.residuals.push_back(j == 0 ? 1.0 : residual);
    }
    return basis;
}

ComplexMatrix sym_projector(std::size_t d) {
    if (d < 1) throw std::domain_error("sym_projector: d must be >= 1");
    const std::size_t dim = d * d;
    if (dim > kMaxDim) throw std::length_error("sym_projector: dimension too large");
    ComplexMatrix p(dim, dim);
    for (std::size_t i = 0; i < d; ++i) {
        p(i * d + i, i * d + i) = 1.0;
    }
    for (std::size_t j = 1; j < d; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const std::size_t ij = i * d + j;
            const std::size_t ji = j * d + i;
            p(ij, ij) += 0.5;
            p(ij, ji) += 0.5;
            p(ji, ij) += 0.5;
            p(ji, ji) += 0.5;
        }
    }
    return p;
}

ComplexMatrix embed(const ComplexMatrix& op,
                    std::span<const std::size_t> acting_slots,
                    const TensorSpace& space) {
    const std::size_t d = space.local_dim;
    std::size_t op_dim = 1;
    for (std::size_t s = 0; s < acting_slots.size(); ++s) op_dim *= d;
    if (op.rows() != op_dim || op.cols() != op_dim) {
        throw std::domain_error("embed: operator dimension does not match slots");
    }
    std::set<std::size_t> seen;
    for (std::size_t slot : acting_slots) {
        if (slot >= space.slots) throw std::domain_error("embed: slot out of range");
        if (!seen.insert(slot).second) {
            throw std::domain_error("embed: repeated slot");
        }
    }
    const std::size_t dim = space.total_dim();
    ComplexMatrix full(dim, dim);

    std::vector<std::size_t> free_slots;
    for (std::size_t l = 0; l < space.slots; ++l) {
        if (!seen.count(l)) free_slots.push_back(l);
    }
    std::size_t free_dim = 1;
    for (std::size_t s = 0; s < free_slots.size(); ++s) free_dim *= d;

    const TensorSpace op_space{acting_slots.size(), d};
    std::vector<std::size_t> row_digits(space.slots), col_digits(space.slots);
    for (std::size_t r = 0; r < op_dim; ++r) {
        const auto r_digits = slot_indices(r, op_space);
        for (std::size_t c = 0; c < op_dim; ++c) {
            const Complex v = op(r, c);
            if (v == Complex{}) continue;
            const auto c_digits = slot_indices(c, op_space);
            for (std::size_t f = 0; f < free_dim; ++f) {
                std::size_t rem = f;
                for (std::size_t s = free_slots.size(); s-- > 0;) {
                    const std::size_t digit = rem % d;
                    rem /= d;
                    row_digits[free_slots[s]] = digit;
                    col_digits[free_slots[s]] = digit;
                }
                for (std::size_t s = 0; s < acting_slots.size(); ++s) {
                    row_digits[acting_slots[s]] = r_digits[s];
                    col_digits[acting_slots[s]] = c_digits[s];
                }
                full(composite_index(row_digits, space),
                     composite_index(col_digits, space)) = v;
            }
        }
    }
    return full;
}

ComplexMatrix subspace_projector(const OrthonormalBasis& basis,
                                 const TensorSpace& space) {
    if (basis.dim != space.local_dim) {
        throw std::domain_error("subspace_projector: basis dimension mismatch");
    }
    const std::size_t d = basis.dim;
    ComplexMatrix slot_proj(d, d);
    for (const auto& b : basis.vectors) {
        slot_proj += ComplexMatrix::outer(b.amplitudes, b.amplitudes);
    }
    ComplexMatrix p = slot_proj;
    for (std::size_t l = 1; l < space.slots; ++l) p = kron(p, slot_proj);
    return p;
}

}  // namespace qid
