#pragma once

#include "qid/matrix.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace qid {

/// SplitMix64 finalizer; the stated mixing function for substream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Substream seed for sample k of a run. Independent of evaluation order,
/// so parallel and serial evaluation give identical streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k) {
    return splitmix64(seed + 0x9E3779B97F4A7C15ULL * (k + 1));
}

/// Seeded generator producing uniform and Gaussian variates through a fully
/// specified pipeline (mt19937_64 bits, Box-Muller), reproducible across
/// platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in (0, 1].
    double uniform();
    double gaussian();

private:
    std::mt19937_64 gen_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

/// Unit-norm pure state of one qudit.
struct PureState {
    std::size_t dim = 0;
    std::vector<Complex> amplitudes;

    double norm() const;
};

Complex inner(const PureState& a, const PureState& b);

/// Haar-random pure state via a normalized column of standard complex
/// Gaussians.
PureState sample_pure_state(std::size_t d, Rng& rng);

struct MonteCarloReport {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// Mean of f over `samples` substreams, one-pass mean/variance update.
/// Deterministic for fixed (f, samples, seed).
MonteCarloReport estimate_mean(const std::function<double(Rng&)>& f,
                               std::uint64_t samples, std::uint64_t seed);

/// Haar average of |<0|psi>|^2.
double moment_overlap2(std::size_t d);
/// Haar average of |<0|psi>|^4.
double moment_overlap4(std::size_t d);
/// Haar average of |<psi_j|j-1>|^2 in the basis built from the sampled
/// states: 1 - (j-1)/d.
double moment_residual(std::size_t j, std::size_t d);

}  // namespace qid
