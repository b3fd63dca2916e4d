#include "qid/unamb.hpp"

#include "qid/scenarios.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace qid;

TEST_CASE("one-known alpha follows the three-branch rule") {
    CHECK(one_known_alpha1(2, 0.1) == doctest::Approx(0.0));
    CHECK(one_known_alpha1(2, 0.5) ==
          doctest::Approx(2.0 - 2.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(one_known_alpha1(2, 0.95) == doctest::Approx(1.0));
    // thresholds sit at eta1 = 1/(d+2) and 4/(d+5)
    CHECK(one_known_alpha1(3, 1.0 / 5.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(one_known_alpha1(3, 0.5) ==
          doctest::Approx(2.0 - 2.0 * std::sqrt(0.5 / 2.0)).epsilon(1e-12));
}

TEST_CASE("two-unknown alpha stationary point and clamps") {
    CHECK(two_unknown_alpha1(0.1) == doctest::Approx(0.0));
    CHECK(two_unknown_alpha1(0.5) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(two_unknown_alpha1(0.9) == doctest::Approx(1.0));
    CHECK(two_unknown_alpha1(0.0) == doctest::Approx(0.0));
    CHECK(two_unknown_alpha1(1.0) == doctest::Approx(1.0));
}

TEST_CASE("one-known success probability branch values") {
    CHECK(ps_one_known(2, 0.1) == doctest::Approx(0.45).epsilon(1e-12));
    CHECK(ps_one_known(2, 1.0) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(ps_one_known(3, 0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("two-unknown success probability branch values") {
    CHECK(ps_two_unknown(2, 0.5) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(ps_two_unknown(2, 0.9) == doctest::Approx(0.225).epsilon(1e-12));
    CHECK(ps_two_unknown(5, 0.1) ==
          doctest::Approx(0.4 * 0.9).epsilon(1e-12));
}

TEST_CASE("success probabilities equal their moment-built trace forms") {
    // The closed forms must coincide with eta1*alpha1*Tr(rho_1 Pi_1) +
    // eta2*Tr(rho_2 Pi_2) written out through the Haar moments.
    for (std::size_t d : {2, 3, 5, 8}) {
        const double m2 = moment_overlap2(d);
        const double m4 = moment_overlap4(d);
        for (int i = 0; i <= 50; ++i) {
            const double eta1 = i / 50.0;
            const double eta2 = 1.0 - eta1;
            {
                const UnambiguousMeasurement meas = one_known_measurement(d, eta1);
                const double traced =
                    eta1 * meas.alpha1 * (1.0 - m2) / 2.0 +
                    eta2 * (meas.alpha2 * (m2 - m4) + 1.0 - 2.0 * m2 + m4);
                CHECK(std::abs(traced - ps_one_known(d, eta1)) <= 1e-12);
            }
            {
                const UnambiguousMeasurement meas = two_unknown_measurement(eta1);
                const double traced = (eta1 * meas.alpha1 + eta2 * meas.alpha2) *
                                      (static_cast<double>(d) - 1.0) /
                                      (2.0 * static_cast<double>(d));
                CHECK(std::abs(traced - ps_two_unknown(d, eta1)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("N-state success probability values and guards") {
    CHECK(ps_n_states(2, 2) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(ps_n_states(3, 4) == doctest::Approx(3.0 / 64.0).epsilon(1e-14));
    CHECK(ps_n_states(4, 4) == doctest::Approx(1.0 / 320.0).epsilon(1e-14));
    CHECK(ps_n_states(3, 1000000) ==
          doctest::Approx(1.0 / 8.0).epsilon(1e-5));
    CHECK_THROWS_AS((void)ps_n_states(3, 2), std::domain_error);
    CHECK_THROWS_AS((void)ps_n_states(1, 5), std::domain_error);
}

TEST_CASE("N-state measurement construction and size guard") {
    const UnambiguousMeasurement meas = n_states_measurement(2);
    CHECK(meas.detection.size() == 2);
    CHECK(meas.detection[0].rows() == 8);
    CHECK_THROWS_AS((void)n_states_measurement(5), std::length_error);
    CHECK_THROWS_AS((void)n_states_measurement(1), std::length_error);
}

TEST_CASE("N-state detection vectors are unit norm with the stated overlaps") {
    for (std::size_t n : {2, 3}) {
        for (std::size_t m = 1; m <= n; ++m) {
            for (std::size_t k = 0; k < n; ++k) {
                const PureState pi = n_state_pi(n, m, k);
                CHECK(pi.norm() == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
        const Complex cross = inner(n_state_pi(n, 1, 0), n_state_pi(n, 2, 0));
        CHECK(std::abs(cross - Complex{-1.0 / static_cast<double>(n)}) <= 1e-12);
    }
}

TEST_CASE("verifier flags a deliberately broken measurement") {
    const Scenario sc = Scenario::n_unknown(2, 2);
    UnambiguousMeasurement meas = n_states_measurement(2);
    ComplexMatrix extra = meas.detection[0];
    extra *= 0.5;
    meas.detection[0] += extra;
    meas.inconclusive -= extra;
    const UnambiguousReport rep =
        verify_unambiguous(meas, rho_reduced(sc), sc.priors);
    CHECK(rep.max_psd_violation > 0.1);
}

TEST_CASE("verifier reports the N=d=2 success value 1/6") {
    const Scenario sc = Scenario::n_unknown(2, 2);
    const UnambiguousReport rep =
        verify_unambiguous(n_states_measurement(2), rho_reduced(sc), sc.priors);
    CHECK(rep.max_psd_violation <= 1e-10);
    CHECK(rep.max_completeness_violation <= 1e-10);
    CHECK(rep.max_no_error_violation <= 1e-10);
    CHECK(rep.p_correct_subspace == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("golden-section sweep finds simple maxima") {
    const SweepResult quad =
        alpha_sweep([](double a) { return -(a - 0.3) * (a - 0.3); });
    CHECK(std::abs(quad.arg - 0.3) <= 1e-8);

    const SweepResult one = alpha_sweep(
        [](double a) { return pc_subspace_one_known(2, 0.5, a); });
    CHECK(std::abs(one.arg - (2.0 - 2.0 / std::sqrt(3.0))) <= 1e-6);

    const SweepResult two = alpha_sweep(
        [](double a) { return pc_subspace_two_unknown(2, 0.5, a); });
    CHECK(std::abs(two.arg - 2.0 / 3.0) <= 1e-6);
}
