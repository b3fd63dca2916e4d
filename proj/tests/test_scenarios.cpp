#include "qid/scenarios.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace qid;

TEST_CASE("scenario factories fix the structural counts") {
    const Scenario one = Scenario::one_known(3, 0.4);
    CHECK(one.n_refs == 1);
    CHECK(one.n_states == 2);
    CHECK(one.span_dim == 2);
    CHECK(one.priors[0] == doctest::Approx(0.4));
    CHECK(one.priors[1] == doctest::Approx(0.6));

    const Scenario two = Scenario::two_unknown(5, 0.25);
    CHECK(two.n_refs == 2);
    CHECK(two.span_dim == 2);

    const Scenario many = Scenario::n_unknown(3, 4);
    CHECK(many.n_refs == 3);
    CHECK(many.n_states == 3);
    CHECK(many.span_dim == 3);
    CHECK(many.priors == std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3});

    CHECK_THROWS_AS((void)Scenario::one_known(3, 1.5), std::domain_error);
    CHECK_THROWS_AS((void)Scenario::n_unknown(4, 3), std::domain_error);
}

TEST_CASE("joint states are the advertised product vectors") {
    Rng rng(77);
    const PureState psi = sample_pure_state(3, rng);
    const Scenario sc = Scenario::one_known(3, 0.5);

    const PureState first = joint_state(sc, {psi}, 1);
    REQUIRE(first.amplitudes.size() == 9);
    CHECK(first.norm() == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(std::abs(first.amplitudes[j] - psi.amplitudes[j]) <= 1e-14);
        CHECK(std::abs(first.amplitudes[3 + j]) <= 1e-14);  // probe is |0>
    }

    const PureState second = joint_state(sc, {psi}, 2);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(std::abs(second.amplitudes[i * 3 + j] -
                           psi.amplitudes[i] * psi.amplitudes[j]) <= 1e-14);
        }
    }

    const Scenario two = Scenario::two_unknown(2, 0.5);
    const PureState a = sample_pure_state(2, rng);
    const PureState b = sample_pure_state(2, rng);
    const PureState j2 = joint_state(two, {a, b}, 2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                CHECK(std::abs(j2.amplitudes[i * 4 + j * 2 + k] -
                               b.amplitudes[i] * a.amplitudes[j] *
                                   b.amplitudes[k]) <= 1e-14);
            }
        }
    }

    CHECK_THROWS_AS((void)joint_state(sc, {psi, psi}, 1), std::domain_error);
    CHECK_THROWS_AS((void)joint_state(sc, {psi}, 3), std::domain_error);
}

TEST_CASE("full-space density operators are Hermitian, positive, unit trace") {
    std::vector<Scenario> scenarios;
    for (std::size_t d : {2, 3, 4}) {
        scenarios.push_back(Scenario::one_known(d, 0.3));
        scenarios.push_back(Scenario::two_unknown(d, 0.3));
        scenarios.push_back(Scenario::n_unknown(2, d));
    }
    scenarios.push_back(Scenario::n_unknown(3, 3));
    for (const Scenario& sc : scenarios) {
        const DensityOperatorSet rhos = rho_full(sc);
        REQUIRE(rhos.operators.size() == sc.n_states);
        for (const ComplexMatrix& rho : rhos.operators) {
            CHECK(hermitian_deviation(rho) <= hermitian_tol(rho));
            CHECK(is_psd(rho));
            CHECK(trace(rho).real() == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("one-known full operators at d=2 take the handbook form") {
    const DensityOperatorSet rhos = rho_full(Scenario::one_known(2, 0.5));
    CHECK(max_abs(rhos.operators[0] -
                  ComplexMatrix::diagonal({0.5, 0.5, 0.0, 0.0})) <= 1e-14);
    ComplexMatrix expected = sym_projector(2);
    expected *= 1.0 / 3.0;
    CHECK(max_abs(rhos.operators[1] - expected) <= 1e-14);
}

TEST_CASE("reduced operators keep ambient-d prefactors") {
    const DensityOperatorSet rhos = rho_reduced(Scenario::one_known(3, 0.5));
    CHECK(rhos.space.local_dim == 2);
    CHECK(trace(rhos.operators[1]).real() == doctest::Approx(0.5).epsilon(1e-12));
    // at d = D the reduced and full operators coincide
    const DensityOperatorSet full = rho_full(Scenario::one_known(2, 0.5));
    const DensityOperatorSet red = rho_reduced(Scenario::one_known(2, 0.5));
    for (std::size_t n = 0; n < 2; ++n) {
        CHECK(max_abs(full.operators[n] - red.operators[n]) <= 1e-14);
    }
}

TEST_CASE("reduced operators are the full ones compressed to the span") {
    // With the span chosen as the first D computational directions, the
    // reduced matrix must reappear inside the full matrix entry for entry.
    for (std::size_t d : {3, 4}) {
        for (const Scenario& sc :
             {Scenario::one_known(d, 0.4), Scenario::two_unknown(d, 0.4)}) {
            const DensityOperatorSet full = rho_full(sc);
            const DensityOperatorSet red = rho_reduced(sc);
            const TensorSpace fs = sc.full_space();
            const TensorSpace rs = sc.reduced_space();
            for (std::size_t n = 0; n < sc.n_states; ++n) {
                double gap = 0.0;
                for (std::size_t i = 0; i < rs.total_dim(); ++i) {
                    for (std::size_t j = 0; j < rs.total_dim(); ++j) {
                        const std::size_t fi =
                            composite_index(slot_indices(i, rs), fs);
                        const std::size_t fj =
                            composite_index(slot_indices(j, rs), fs);
                        gap = std::max(gap, std::abs(full.operators[n](fi, fj) -
                                                     red.operators[n](i, j)));
                    }
                }
                CHECK(gap <= 1e-12);
            }
        }
    }
}

TEST_CASE("reference-slot relabeling permutes the equiprobable operators") {
    const Scenario sc = Scenario::n_unknown(2, 2);
    const DensityOperatorSet rhos = rho_full(sc);
    const TensorSpace space = sc.full_space();
    const std::size_t dim = space.total_dim();
    ComplexMatrix perm(dim, dim);  // swap reference slots 1 and 2
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<std::size_t> digits = slot_indices(i, space);
        std::swap(digits[1], digits[2]);
        perm(composite_index(digits, space), i) = 1.0;
    }
    const ComplexMatrix mapped =
        matmul(perm, matmul(rhos.operators[0], dagger(perm)));
    CHECK(max_abs(mapped - rhos.operators[1]) <= 1e-12);
}

TEST_CASE("co-moving averages match a direct Monte Carlo mean") {
    // Draw states, express the joint vectors in the basis the draw itself
    // defines, and average the outer products: this reproduces rho_adapted.
    for (const Scenario& sc :
         {Scenario::one_known(3, 0.5), Scenario::two_unknown(3, 0.5)}) {
        const TensorSpace rs = sc.reduced_space();
        const std::size_t dim = rs.total_dim();
        const DensityOperatorSet adapted = rho_adapted(sc);
        const std::size_t samples = 20000;
        for (std::size_t n = 1; n <= sc.n_states; ++n) {
            ComplexMatrix mean(dim, dim);
            for (std::size_t s = 0; s < samples; ++s) {
                Rng rng(mix_seed(4321 + n, s));
                std::vector<PureState> spanning;
                if (sc.kind == ScenarioKind::OneKnownOneUnknown) {
                    PureState e0{sc.d, std::vector<Complex>(sc.d)};
                    e0.amplitudes[0] = 1.0;
                    spanning = {e0, sample_pure_state(sc.d, rng)};
                } else {
                    spanning = {sample_pure_state(sc.d, rng),
                                sample_pure_state(sc.d, rng)};
                }
                const OrthonormalBasis basis = gram_schmidt(spanning);
                const std::vector<PureState> unknowns(
                    spanning.begin() +
                        (sc.kind == ScenarioKind::OneKnownOneUnknown ? 1 : 0),
                    spanning.end());
                const PureState joint = joint_state(sc, unknowns, n);
                // coordinates of the joint state in the product basis
                std::vector<Complex> coords(dim);
                for (std::size_t i = 0; i < dim; ++i) {
                    const std::vector<std::size_t> digits = slot_indices(i, rs);
                    Complex acc = 0.0;
                    for (std::size_t f = 0; f < joint.amplitudes.size(); ++f) {
                        const std::vector<std::size_t> fd =
                            slot_indices(f, sc.full_space());
                        Complex w = joint.amplitudes[f];
                        for (std::size_t l = 0; l < rs.slots; ++l) {
                            w *= std::conj(
                                basis.vectors[digits[l]].amplitudes[fd[l]]);
                        }
                        acc += w;
                    }
                    coords[i] = acc;
                }
                mean += ComplexMatrix::outer(coords, coords);
            }
            mean *= 1.0 / static_cast<double>(samples);
            const double band = 4.0 / std::sqrt(static_cast<double>(samples));
            CHECK(max_abs(mean - adapted.operators[n - 1]) <= band);
        }
    }
}

TEST_CASE("rho_adapted has unit trace and the N-state first operator is exact") {
    for (const Scenario& sc :
         {Scenario::one_known(4, 0.3), Scenario::two_unknown(3, 0.7)}) {
        const DensityOperatorSet adapted = rho_adapted(sc);
        for (const ComplexMatrix& rho : adapted.operators) {
            CHECK(trace(rho).real() == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(is_psd(rho));
        }
    }
    const ComplexMatrix first = rho_adapted_first(Scenario::n_unknown(3, 5));
    CHECK(trace(first).real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(is_psd(first));
    CHECK_THROWS_AS((void)rho_adapted(Scenario::n_unknown(3, 5)),
                    std::domain_error);
}
