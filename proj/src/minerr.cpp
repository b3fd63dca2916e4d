#include "qid/minerr.hpp"

#include <cmath>
#include <stdexcept>

namespace qid {

namespace {

void check_state_operator(const ComplexMatrix& rho, const char* name) {
    if (hermitian_deviation(rho) > hermitian_tol(rho)) {
        throw std::invalid_argument(std::string("helstrom: ") + name +
                                    " is not Hermitian");
    }
    if (!is_psd(rho)) {
        throw std::invalid_argument(std::string("helstrom: ") + name +
                                    " is not positive semidefinite");
    }
    if (trace(rho).real() > 1.0 + 1e-8) {
        throw std::invalid_argument(std::string("helstrom: ") + name +
                                    " has trace above 1");
    }
}

}  // namespace

MinErrResult helstrom(const ComplexMatrix& rho1, const ComplexMatrix& rho2,
                      double eta1) {
    if (!(eta1 >= 0.0 && eta1 <= 1.0)) {
        throw std::invalid_argument("helstrom: eta1 must lie in [0, 1]");
    }
    if (rho1.rows() != rho2.rows() || rho1.cols() != rho2.cols()) {
        throw std::invalid_argument("helstrom: operators live on different spaces");
    }
    check_state_operator(rho1, "rho1");
    check_state_operator(rho2, "rho2");

    const double eta2 = 1.0 - eta1;
    ComplexMatrix lambda = rho2 * Complex{eta2} - rho1 * Complex{eta1};
    const EigenSystem sys = eig_hermitian(lambda);
    const std::size_t n = lambda.rows();
    const double cutoff =
        -kPsdTol * std::max(std::abs(sys.eigenvalues.front()),
                            std::abs(sys.eigenvalues.back()));

    MinErrResult result;
    result.pi1 = ComplexMatrix(n, n);
    double neg_sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (sys.eigenvalues[k] < cutoff) {
            result.negative_eigenvalues.push_back(sys.eigenvalues[k]);
            neg_sum += sys.eigenvalues[k];
            std::vector<Complex> v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = sys.eigenvectors(i, k);
            result.pi1 += ComplexMatrix::outer(v, v);
        }
    }
    result.p_correct = eta2 - neg_sum;
    return result;
}

double pc_one_known(std::size_t d, double eta1) {
    if (d < 2) throw std::domain_error("pc_one_known: d must be >= 2");
    const double dd = static_cast<double>(d);
    const double eta2 = 1.0 - eta1;
    const double w =
        std::sqrt((dd + 1.0) * (dd + 1.0) * eta1 * eta1 + 4.0 * eta2 * eta2);
    return dd / (dd + 1.0) +
           ((dd - 1.0) * (w - dd * eta1) + std::abs(2.0 - (dd + 3.0) * eta1)) /
               (2.0 * dd * (dd + 1.0));
}

double pc_two_unknown(std::size_t d, double eta1) {
    if (d < 2) throw std::domain_error("pc_two_unknown: d must be >= 2");
    const double dd = static_cast<double>(d);
    const double eta2 = 1.0 - eta1;
    return 0.5 + (dd + 2.0) / (6.0 * dd) * std::abs(1.0 - 2.0 * eta1) +
           (dd - 1.0) / (3.0 * dd) * std::sqrt(1.0 - eta1 * eta2);
}

ComplexMatrix pi1_full_one_known(std::size_t d, double eta1) {
    if (d < 2) throw std::domain_error("pi1_full_one_known: d must be >= 2");
    const double dd = static_cast<double>(d);
    const double eta2 = 1.0 - eta1;
    const double w =
        std::sqrt((dd + 1.0) * (dd + 1.0) * eta1 * eta1 + 4.0 * eta2 * eta2);
    const double c1 = std::sqrt(0.5 + (dd + 1.0) * eta1 / (2.0 * w));
    const double c2 = std::sqrt(0.5 - (dd + 1.0) * eta1 / (2.0 * w));

    const std::size_t dim = d * d;
    ComplexMatrix pi(dim, dim);
    for (std::size_t j = 1; j < d; ++j) {
        std::vector<Complex> v(dim);
        v[0 * d + j] = c1;   // |0>_0 |j>_1
        v[j * d + 0] = -c2;  // |j>_0 |0>_1
        pi += ComplexMatrix::outer(v, v);
    }
    if (eta1 > 2.0 / (dd + 3.0)) {
        std::vector<Complex> v(dim);
        v[0] = 1.0;  // |0>_0 |0>_1
        pi += ComplexMatrix::outer(v, v);
    }
    return pi;
}

double pc_oracle_full(const Scenario& scenario) {
    if (scenario.n_states != 2) {
        throw std::domain_error("pc_oracle_full: two-state scenarios only");
    }
    const auto rhos = rho_full(scenario);
    return helstrom(rhos.operators[0], rhos.operators[1], scenario.priors[0])
        .p_correct;
}

double pc_oracle_reduced(const Scenario& scenario) {
    if (scenario.n_states != 2) {
        throw std::domain_error("pc_oracle_reduced: two-state scenarios only");
    }
    const double eta1 = scenario.priors[0];
    const double eta2 = scenario.priors[1];
    const auto reduced = rho_reduced(scenario);
    const ComplexMatrix pi1 =
        helstrom(reduced.operators[0], reduced.operators[1], eta1).pi1;
    const auto adapted = rho_adapted(scenario);
    const ComplexMatrix lambda = adapted.operators[1] * Complex{eta2} -
                                 adapted.operators[0] * Complex{eta1};
    return eta2 - trace(matmul(lambda, pi1)).real();
}

}  // namespace qid
