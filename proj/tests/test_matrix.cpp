#include "qid/haar.hpp"
#include "qid/matrix.hpp"
#include "qid/scenarios.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace qid;

namespace {

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = rng.gaussian();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex z{rng.gaussian(), rng.gaussian()};
            a(i, j) = z;
            a(j, i) = std::conj(z);
        }
    }
    return a;
}

ComplexMatrix random_matrix(std::size_t n, Rng& rng) {
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = Complex{rng.gaussian(), rng.gaussian()};
        }
    }
    return a;
}

}  // namespace

TEST_CASE("kron identity and diagonal cases") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    const ComplexMatrix i4 = kron(i2, i2);
    CHECK(max_abs(i4 - ComplexMatrix::identity(4)) == 0.0);

    const ComplexMatrix a = ComplexMatrix::diagonal({1.0, 0.0});
    const ComplexMatrix b = ComplexMatrix::diagonal({1.0, 1.0});
    const ComplexMatrix expected = ComplexMatrix::diagonal({1.0, 1.0, 0.0, 0.0});
    CHECK(max_abs(kron(a, b) - expected) == 0.0);
}

TEST_CASE("kron trace multiplicativity and associativity") {
    Rng rng(11);
    const ComplexMatrix a = random_matrix(3, rng);
    const ComplexMatrix b = random_matrix(2, rng);
    const ComplexMatrix c = random_matrix(2, rng);
    CHECK(std::abs(trace(kron(a, b)) - trace(a) * trace(b)) <=
          1e-12 * std::abs(trace(a) * trace(b)));
    CHECK(max_abs(kron(kron(a, b), c) - kron(a, kron(b, c))) <= 1e-14);

    const ComplexMatrix proj = ComplexMatrix::diagonal({1.0, 0.0});
    CHECK(trace(kron(proj, sym_projector(2))).real() == doctest::Approx(3.0));
}

TEST_CASE("kron rejects dimension overflow") {
    const ComplexMatrix big = ComplexMatrix::identity(kMaxDim / 2 + 1);
    CHECK_THROWS_AS((void)kron(big, ComplexMatrix::identity(2)),
                    std::length_error);
}

TEST_CASE("eig_hermitian diagonal and Pauli cases") {
    const EigenSystem diag = eig_hermitian(ComplexMatrix::diagonal({3.0, 1.0, 2.0}));
    REQUIRE(diag.eigenvalues.size() == 3);
    CHECK(diag.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(diag.eigenvalues[1] == doctest::Approx(2.0));
    CHECK(diag.eigenvalues[2] == doctest::Approx(3.0));

    ComplexMatrix x(2, 2);
    x(0, 1) = x(1, 0) = 1.0;
    const EigenSystem pauli = eig_hermitian(x);
    CHECK(pauli.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(pauli.eigenvalues[1] == doctest::Approx(1.0));
}

TEST_CASE("eig_hermitian reconstructs random Hermitian input") {
    Rng rng(7);
    for (std::size_t n : {2, 5, 16, 64, 256}) {
        const ComplexMatrix a = random_hermitian(n, rng);
        const EigenSystem es = eig_hermitian(a);
        REQUIRE(es.eigenvalues.size() == n);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            CHECK(es.eigenvalues[k] <= es.eigenvalues[k + 1]);
        }
        ComplexMatrix rebuilt(n, n);
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    rebuilt(i, j) += es.eigenvalues[k] * es.eigenvectors(i, k) *
                                     std::conj(es.eigenvectors(j, k));
                }
            }
        }
        CHECK(max_abs(a - rebuilt) <= 1e-10 * (1.0 + max_abs(a)));
        const ComplexMatrix gram = matmul(dagger(es.eigenvectors), es.eigenvectors);
        CHECK(max_abs(gram - ComplexMatrix::identity(n)) <=
              1e-10 * (1.0 + max_abs(a)));
    }
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
    ComplexMatrix a(2, 2);
    a(0, 1) = 1.0;  // missing conjugate partner
    CHECK_THROWS_AS((void)eig_hermitian(a), std::invalid_argument);
}

TEST_CASE("negative eigenvalues of the one-known reduced difference operator") {
    // d=2, eta1=1/2: the negative spectrum is {-(1+sqrt(13))/24, -1/12}.
    const Scenario sc = Scenario::one_known(2, 0.5);
    const DensityOperatorSet rhos = rho_reduced(sc);
    ComplexMatrix lambda = rhos.operators[1];
    lambda *= 0.5;
    ComplexMatrix part1 = rhos.operators[0];
    part1 *= 0.5;
    lambda -= part1;
    const EigenSystem es = eig_hermitian(lambda);
    std::vector<double> negatives;
    for (double v : es.eigenvalues) {
        if (v < -1e-12) negatives.push_back(v);
    }
    REQUIRE(negatives.size() == 2);
    CHECK(negatives[0] == doctest::Approx(-(1.0 + std::sqrt(13.0)) / 24.0)
                              .epsilon(1e-12));
    CHECK(negatives[1] == doctest::Approx(-1.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("trace, matmul cyclicity, dagger involution") {
    CHECK(trace(ComplexMatrix::identity(5)).real() == doctest::Approx(5.0));
    Rng rng(3);
    const ComplexMatrix a = random_matrix(4, rng);
    const ComplexMatrix b = random_matrix(4, rng);
    CHECK(std::abs(trace(matmul(a, b)) - trace(matmul(b, a))) <= 1e-12);
    CHECK(max_abs(dagger(dagger(a)) - a) == 0.0);
    CHECK_THROWS_AS((void)matmul(a, ComplexMatrix::identity(3)),
                    std::invalid_argument);
}

TEST_CASE("min_eigenvalue and positivity test") {
    CHECK(min_eigenvalue(ComplexMatrix::identity(4)) == doctest::Approx(1.0));
    CHECK(min_eigenvalue(ComplexMatrix::diagonal({1.0, -0.5})) ==
          doctest::Approx(-0.5));
    CHECK(is_psd(ComplexMatrix::identity(3)));
    CHECK_FALSE(is_psd(ComplexMatrix::diagonal({1.0, -0.5})));
}
