#include "qid/unamb.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qid {

namespace {

double alpha2_one_known(double alpha1) { return (2.0 - 2.0 * alpha1) / (2.0 - alpha1); }
double alpha2_two_unknown(double alpha1) {
    return (4.0 - 4.0 * alpha1) / (4.0 - 3.0 * alpha1);
}

double factorial(std::size_t n) {
    double f = 1.0;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
    return f;
}

int permutation_sign(const std::vector<std::size_t>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) ++inversions;
        }
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

ComplexMatrix fill_inconclusive(const std::vector<ComplexMatrix>& detection,
                                std::size_t dim) {
    ComplexMatrix pi0 = ComplexMatrix::identity(dim);
    for (const auto& pi : detection) pi0 -= pi;
    return pi0;
}

}  // namespace

double one_known_alpha1(std::size_t d, double eta1) {
    const double eta2 = 1.0 - eta1;
    const double lhs = (static_cast<double>(d) + 1.0) * eta1;
    if (lhs <= eta2) return 0.0;
    if (lhs >= 4.0 * eta2) return 1.0;
    return 2.0 - 2.0 * std::sqrt(eta2 / lhs);
}

double two_unknown_alpha1(double eta1) {
    if (eta1 <= 0.0) return 0.0;
    const double eta2 = 1.0 - eta1;
    const double stationary = (4.0 - 2.0 * std::sqrt(eta2 / eta1)) / 3.0;
    return std::clamp(stationary, 0.0, 1.0);
}

UnambiguousMeasurement one_known_measurement(std::size_t d, double eta1) {
    if (d < 2) throw std::domain_error("one_known_measurement: d must be >= 2");
    UnambiguousMeasurement meas;
    meas.space = {2, 2};
    meas.alpha1 = one_known_alpha1(d, eta1);
    meas.alpha2 = alpha2_one_known(meas.alpha1);

    std::vector<Complex> pi1_vec(4);
    pi1_vec[1] = 1.0 / std::sqrt(2.0);   // |0>_0 |1>_1
    pi1_vec[2] = -1.0 / std::sqrt(2.0);  // |1>_0 |0>_1
    ComplexMatrix pi1 = ComplexMatrix::outer(pi1_vec, pi1_vec) * Complex{meas.alpha1};

    ComplexMatrix pi2(4, 4);
    pi2(2, 2) = meas.alpha2;  // |10><10|
    pi2(3, 3) = 1.0;          // |11><11|

    meas.detection = {std::move(pi1), std::move(pi2)};
    meas.inconclusive = fill_inconclusive(meas.detection, 4);
    return meas;
}

UnambiguousMeasurement two_unknown_measurement(double eta1) {
    UnambiguousMeasurement meas;
    meas.space = {3, 2};
    meas.alpha1 = two_unknown_alpha1(eta1);
    meas.alpha2 = alpha2_two_unknown(meas.alpha1);

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    ComplexMatrix pi1(8, 8), pi2(8, 8);
    for (std::size_t k = 0; k < 2; ++k) {
        // |k>_1 times the antisymmetric pair on slots 0 and 2
        std::vector<Complex> v1(8);
        v1[0 * 4 + k * 2 + 1] = inv_sqrt2;
        v1[1 * 4 + k * 2 + 0] = -inv_sqrt2;
        pi1 += ComplexMatrix::outer(v1, v1);
        // |k>_2 times the antisymmetric pair on slots 0 and 1
        std::vector<Complex> v2(8);
        v2[0 * 4 + 1 * 2 + k] = inv_sqrt2;
        v2[1 * 4 + 0 * 2 + k] = -inv_sqrt2;
        pi2 += ComplexMatrix::outer(v2, v2);
    }
    pi1 *= meas.alpha1;
    pi2 *= meas.alpha2;
    meas.detection = {std::move(pi1), std::move(pi2)};
    meas.inconclusive = fill_inconclusive(meas.detection, 8);
    return meas;
}

double ps_one_known(std::size_t d, double eta1) {
    if (d < 2) throw std::domain_error("ps_one_known: d must be >= 2");
    const double dd = static_cast<double>(d);
    const double eta2 = 1.0 - eta1;
    if (eta1 <= 1.0 / (dd + 2.0)) {
        return (dd - 1.0) / dd * eta2;
    }
    if (eta1 <= 4.0 / (dd + 5.0)) {
        return (dd - 1.0) / dd *
               ((dd + 2.0 - eta1) / (dd + 1.0) -
                2.0 * std::sqrt(eta1 * eta2 / (dd + 1.0)));
    }
    return (dd - 1.0) / (dd + 1.0) * (1.0 - eta1 * (dd - 1.0) / (2.0 * dd));
}

double ps_two_unknown(std::size_t d, double eta1) {
    if (d < 2) throw std::domain_error("ps_two_unknown: d must be >= 2");
    const double dd = static_cast<double>(d);
    const double eta2 = 1.0 - eta1;
    if (eta1 <= 0.2) return (dd - 1.0) / (2.0 * dd) * eta2;
    if (eta1 >= 0.8) return (dd - 1.0) / (2.0 * dd) * eta1;
    return 2.0 * (dd - 1.0) / (3.0 * dd) * (1.0 - std::sqrt(eta1 * eta2));
}

double ps_n_states(std::size_t n, std::size_t d) {
    if (n < 2) throw std::domain_error("ps_n_states: need at least two states");
    if (d < n) {
        throw std::domain_error(
            "ps_n_states: d < N, the states could not be linearly independent");
    }
    const double dd = static_cast<double>(d);
    const double nn = static_cast<double>(n);
    double product = 1.0;
    for (std::size_t j = 2; j <= n; ++j) product *= moment_residual(j, d);
    (void)dd;
    return nn / ((nn + 1.0) * factorial(n)) * product;
}

PureState n_state_pi(std::size_t n_states, std::size_t n, std::size_t k) {
    if (n < 1 || n > n_states || k >= n_states) {
        throw std::domain_error("n_state_pi: index out of range");
    }
    const TensorSpace space{n_states + 1, n_states};
    const std::size_t dim = space.total_dim();
    PureState pi{dim, std::vector<Complex>(dim)};

    std::vector<std::size_t> other_slots;
    for (std::size_t l = 0; l <= n_states; ++l) {
        if (l != n) other_slots.push_back(l);
    }
    const double global = ((n % 2 == 0) ? 1.0 : -1.0) / std::sqrt(factorial(n_states));

    std::vector<std::size_t> values(n_states);
    std::iota(values.begin(), values.end(), 0);
    std::vector<std::size_t> digits(space.slots);
    do {
        digits[n] = k;
        for (std::size_t s = 0; s < other_slots.size(); ++s) {
            digits[other_slots[s]] = values[s];
        }
        pi.amplitudes[composite_index(digits, space)] =
            global * permutation_sign(values);
    } while (std::next_permutation(values.begin(), values.end()));
    return pi;
}

UnambiguousMeasurement n_states_measurement(std::size_t n) {
    if (n < 2 || n > 4) {
        throw std::length_error(
            "n_states_measurement: N must be 2, 3 or 4 (larger N exceeds the "
            "composite-dimension cap)");
    }
    UnambiguousMeasurement meas;
    meas.space = {n + 1, n};
    meas.alpha1 = meas.alpha2 = std::nan("");
    const std::size_t dim = meas.space.total_dim();
    const double weight = static_cast<double>(n) / (static_cast<double>(n) + 1.0);
    for (std::size_t m = 1; m <= n; ++m) {
        ComplexMatrix pi(dim, dim);
        for (std::size_t k = 0; k < n; ++k) {
            const PureState v = n_state_pi(n, m, k);
            pi += ComplexMatrix::outer(v.amplitudes, v.amplitudes);
        }
        pi *= weight;
        meas.detection.push_back(std::move(pi));
    }
    meas.inconclusive = fill_inconclusive(meas.detection, dim);
    return meas;
}

UnambiguousReport verify_unambiguous(const UnambiguousMeasurement& meas,
                                     const DensityOperatorSet& rhos,
                                     const std::vector<double>& priors) {
    if (rhos.operators.size() != meas.detection.size() ||
        priors.size() != meas.detection.size()) {
        throw std::domain_error("verify_unambiguous: operator count mismatch");
    }
    UnambiguousReport report;
    const auto psd_violation = [](const ComplexMatrix& op) {
        return std::max(0.0, -min_eigenvalue(op));
    };
    for (const auto& pi : meas.detection) {
        report.max_psd_violation = std::max(report.max_psd_violation, psd_violation(pi));
    }
    report.max_psd_violation =
        std::max(report.max_psd_violation, psd_violation(meas.inconclusive));

    ComplexMatrix residual = ComplexMatrix::identity(meas.space.total_dim());
    for (const auto& pi : meas.detection) residual -= pi;
    residual -= meas.inconclusive;
    report.max_completeness_violation = max_abs(residual);

    for (std::size_t n = 0; n < rhos.operators.size(); ++n) {
        for (std::size_t m = 0; m < meas.detection.size(); ++m) {
            if (m == n) continue;
            report.max_no_error_violation =
                std::max(report.max_no_error_violation,
                         max_abs(matmul(rhos.operators[n], meas.detection[m])));
        }
        report.p_correct_subspace +=
            priors[n] *
            trace(matmul(rhos.operators[n], meas.detection[n])).real();
    }
    return report;
}

SweepResult alpha_sweep(const std::function<double(double)>& objective) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = 0.0, b = 1.0;
    double c = b - phi * (b - a);
    double d = a + phi * (b - a);
    double fc = objective(c);
    double fd = objective(d);
    while (b - a > 1e-10) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = objective(d);
        }
    }
    const double arg = 0.5 * (a + b);
    return {arg, objective(arg)};
}

double pc_subspace_one_known(std::size_t d, double eta1, double alpha1) {
    const double dd = static_cast<double>(d);
    const double eta2 = 1.0 - eta1;
    const double alpha2 = alpha2_one_known(alpha1);
    return eta1 * alpha1 / (2.0 * dd) +
           eta2 * 2.0 / ((dd + 1.0) * dd) * (alpha2 / 2.0 + 1.0);
}

double pc_subspace_two_unknown(std::size_t d, double eta1, double alpha1) {
    const double dd = static_cast<double>(d);
    const double eta2 = 1.0 - eta1;
    const double alpha2 = alpha2_two_unknown(alpha1);
    return 3.0 * (eta1 * alpha1 + eta2 * alpha2) / ((dd + 1.0) * dd * dd);
}

}  // namespace qid
