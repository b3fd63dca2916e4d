#include "qid/haar.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qid {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double Rng::uniform() {
    // 53 bits, shifted into (0, 1] so log() below is always finite.
    const std::uint64_t bits = gen_() >> 11;
    return static_cast<double>(bits + 1) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(phi);
    has_cached_ = true;
    return r * std::cos(phi);
}

double PureState::norm() const {
    double n2 = 0.0;
    for (const auto& a : amplitudes) n2 += std::norm(a);
    return std::sqrt(n2);
}

Complex inner(const PureState& a, const PureState& b) {
    if (a.dim != b.dim) throw std::invalid_argument("inner: dimension mismatch");
    Complex s{};
    for (std::size_t i = 0; i < a.dim; ++i) {
        s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    }
    return s;
}

PureState sample_pure_state(std::size_t d, Rng& rng) {
    if (d == 0) throw std::domain_error("sample_pure_state: d must be >= 1");
    PureState psi{d, std::vector<Complex>(d)};
    for (auto& a : psi.amplitudes) {
        const double re = rng.gaussian();
        const double im = rng.gaussian();
        a = Complex(re, im);
    }
    const double n = psi.norm();
    for (auto& a : psi.amplitudes) a /= n;
    return psi;
}

MonteCarloReport estimate_mean(const std::function<double(Rng&)>& f,
                               std::uint64_t samples, std::uint64_t seed) {
    if (samples < 2) throw std::domain_error("estimate_mean: samples must be >= 2");
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t k = 0; k < samples; ++k) {
        Rng rng(mix_seed(seed, k));
        const double x = f(rng);
        const double delta = x - mean;
        mean += delta / static_cast<double>(k + 1);
        m2 += delta * (x - mean);
    }
    const double n = static_cast<double>(samples);
    MonteCarloReport report;
    report.estimate = mean;
    report.std_error = std::sqrt(m2 / (n - 1.0) / n);
    report.samples = samples;
    report.seed = seed;
    return report;
}

double moment_overlap2(std::size_t d) {
    if (d < 1) throw std::domain_error("moment_overlap2: d must be >= 1");
    return 1.0 / static_cast<double>(d);
}

double moment_overlap4(std::size_t d) {
    if (d < 1) throw std::domain_error("moment_overlap4: d must be >= 1");
    const double dd = static_cast<double>(d);
    return 2.0 / (dd * (dd + 1.0));
}

double moment_residual(std::size_t j, std::size_t d) {
    if (d < 1 || j < 1 || j > d) {
        throw std::domain_error("moment_residual: need 1 <= j <= d");
    }
    return 1.0 - static_cast<double>(j - 1) / static_cast<double>(d);
}

}  // namespace qid
