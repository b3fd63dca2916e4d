#include "qid/scenarios.hpp"

#include <cmath>
#include <stdexcept>

namespace qid {

namespace {

void check_eta(double eta1) {
    if (!(eta1 >= 0.0 && eta1 <= 1.0)) {
        throw std::domain_error("scenario: eta1 must lie in [0, 1]");
    }
}

PureState basis_state(std::size_t d, std::size_t i) {
    PureState s{d, std::vector<Complex>(d)};
    s.amplitudes[i] = 1.0;
    return s;
}

PureState tensor(const std::vector<const PureState*>& factors) {
    PureState out{1, {Complex{1.0}}};
    for (const PureState* f : factors) {
        std::vector<Complex> next(out.dim * f->dim);
        for (std::size_t i = 0; i < out.dim; ++i) {
            for (std::size_t j = 0; j < f->dim; ++j) {
                next[i * f->dim + j] = out.amplitudes[i] * f->amplitudes[j];
            }
        }
        out.dim = next.size();
        out.amplitudes = std::move(next);
    }
    return out;
}

double unknown_prefactor(std::size_t d, std::size_t n_refs) {
    return 2.0 / ((static_cast<double>(d) + 1.0) *
                  std::pow(static_cast<double>(d), static_cast<double>(n_refs)));
}

double known_prefactor(std::size_t d, std::size_t n_refs) {
    return 1.0 / std::pow(static_cast<double>(d), static_cast<double>(n_refs));
}

// Density operators at the structural dimension `dim` (d for the full space,
// D for the reduced one), with prefactors always taken at the ambient d.
DensityOperatorSet assemble(const Scenario& sc, std::size_t dim) {
    const TensorSpace space{sc.n_refs + 1, dim};
    DensityOperatorSet set{space, {}};
    const ComplexMatrix sym = sym_projector(dim);
    switch (sc.kind) {
        case ScenarioKind::OneKnownOneUnknown: {
            // state 1: probe fixed to |0>, reference carries the unknown state
            const auto e0 = basis_state(dim, 0);
            const std::size_t slot0[] = {0};
            ComplexMatrix rho1 =
                embed(ComplexMatrix::outer(e0.amplitudes, e0.amplitudes), slot0,
                      space);
            rho1 *= known_prefactor(sc.d, sc.n_refs);
            const std::size_t both[] = {0, 1};
            ComplexMatrix rho2 = embed(sym, both, space);
            rho2 *= unknown_prefactor(sc.d, sc.n_refs);
            set.operators = {std::move(rho1), std::move(rho2)};
            break;
        }
        case ScenarioKind::TwoUnknown:
        case ScenarioKind::NUnknownEquiprobable: {
            for (std::size_t n = 1; n <= sc.n_states; ++n) {
                const std::size_t slots[] = {0, n};
                ComplexMatrix rho = embed(sym, slots, space);
                rho *= unknown_prefactor(sc.d, sc.n_refs);
                set.operators.push_back(std::move(rho));
            }
            break;
        }
    }
    return set;
}

}  // namespace

Scenario Scenario::one_known(std::size_t d, double eta1) {
    if (d < 2) throw std::domain_error("scenario: d must be >= 2");
    check_eta(eta1);
    return {ScenarioKind::OneKnownOneUnknown, d, 1, 2, 2, {eta1, 1.0 - eta1}};
}

Scenario Scenario::two_unknown(std::size_t d, double eta1) {
    if (d < 2) throw std::domain_error("scenario: d must be >= 2");
    check_eta(eta1);
    return {ScenarioKind::TwoUnknown, d, 2, 2, 2, {eta1, 1.0 - eta1}};
}

Scenario Scenario::n_unknown(std::size_t n, std::size_t d) {
    if (n < 2) throw std::domain_error("scenario: need at least two states");
    if (d < n) {
        throw std::domain_error(
            "scenario: d must be >= N for linearly independent states");
    }
    std::vector<double> priors(n, 1.0 / static_cast<double>(n));
    return {ScenarioKind::NUnknownEquiprobable, d, n, n, n, std::move(priors)};
}

PureState joint_state(const Scenario& scenario,
                      const std::vector<PureState>& unknown_states,
                      std::size_t n) {
    const std::size_t expected =
        scenario.kind == ScenarioKind::OneKnownOneUnknown ? 1 : scenario.n_refs;
    if (unknown_states.size() != expected) {
        throw std::domain_error("joint_state: wrong number of unknown states");
    }
    if (n < 1 || n > scenario.n_states) {
        throw std::domain_error("joint_state: state index out of range");
    }
    for (const auto& s : unknown_states) {
        if (s.dim != scenario.d) {
            throw std::domain_error("joint_state: state dimension mismatch");
        }
    }
    std::vector<const PureState*> factors;
    PureState known;
    if (scenario.kind == ScenarioKind::OneKnownOneUnknown) {
        known = basis_state(scenario.d, 0);
        factors = {n == 1 ? &known : &unknown_states[0], &unknown_states[0]};
    } else {
        factors.push_back(&unknown_states[n - 1]);  // probe
        for (std::size_t l = 0; l < scenario.n_refs; ++l) {
            factors.push_back(&unknown_states[l]);
        }
    }
    return tensor(factors);
}

DensityOperatorSet rho_full(const Scenario& scenario) {
    return assemble(scenario, scenario.d);
}

DensityOperatorSet rho_reduced(const Scenario& scenario) {
    return assemble(scenario, scenario.span_dim);
}

DensityOperatorSet rho_adapted(const Scenario& sc) {
    const double m2 = moment_overlap2(sc.d);
    const double m4 = moment_overlap4(sc.d);
    const TensorSpace space = sc.reduced_space();
    DensityOperatorSet set{space, {}};

    // Fourth-moment block of a state that occupies two slots at once: in the
    // basis the state itself helps define, its coordinates are (c, sqrt(1-|c|^2))
    // with E|c|^2 = m2, E|c|^4 = m4 and uniform phase.
    const auto pair_block = [&](std::size_t i00, std::size_t i01, std::size_t i10,
                                std::size_t i11, ComplexMatrix& rho) {
        rho(i00, i00) = m4;
        rho(i01, i01) = rho(i01, i10) = rho(i10, i01) = rho(i10, i10) = m2 - m4;
        rho(i11, i11) = 1.0 - 2.0 * m2 + m4;
    };

    switch (sc.kind) {
        case ScenarioKind::OneKnownOneUnknown: {
            ComplexMatrix r1(4, 4), r2(4, 4);
            r1(0, 0) = m2;        // |00>
            r1(1, 1) = 1.0 - m2;  // |01>
            pair_block(0, 1, 2, 3, r2);
            set.operators = {std::move(r1), std::move(r2)};
            break;
        }
        case ScenarioKind::TwoUnknown: {
            ComplexMatrix r1(8, 8), r2(8, 8);
            r1(0, 0) = m2;        // |000>
            r1(1, 1) = 1.0 - m2;  // |001>
            // state 2 occupies slots 0 and 2, slot 1 holds |0>
            pair_block(0, 1, 4, 5, r2);
            set.operators = {std::move(r1), std::move(r2)};
            break;
        }
        case ScenarioKind::NUnknownEquiprobable:
            throw std::domain_error(
                "rho_adapted: only the first operator is available for the "
                "N-state family; use rho_adapted_first");
    }
    return set;
}

ComplexMatrix rho_adapted_first(const Scenario& sc) {
    if (sc.kind != ScenarioKind::NUnknownEquiprobable) {
        return rho_adapted(sc).operators.front();
    }
    // |Psi_1> in the co-moving basis: slots 0 and 1 are deterministically |0>,
    // and state j >= 2 contributes independent coordinates with mean square
    // 1/d below the diagonal and 1 - (j-1)/d on it.
    const std::size_t n = sc.n_refs;
    const double inv_d = 1.0 / static_cast<double>(sc.d);
    std::vector<double> e0(n, 0.0);
    e0[0] = 1.0;
    ComplexMatrix rho = kron(ComplexMatrix::diagonal(e0), ComplexMatrix::diagonal(e0));
    for (std::size_t j = 2; j <= n; ++j) {
        std::vector<double> q(n, 0.0);
        for (std::size_t k = 0; k + 1 < j; ++k) q[k] = inv_d;
        q[j - 1] = moment_residual(j, sc.d);
        rho = kron(rho, ComplexMatrix::diagonal(q));
    }
    return rho;
}

}  // namespace qid
