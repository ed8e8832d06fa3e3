#pragma once

#include <cstddef>
#include <cstdint>

#include "zenoptics/trig.hpp"

namespace zenoptics {

/// Photon-counting experiment on the measured chain: each photon faces a
/// Bernoulli survival draw at every analyzer stage.
struct MonteCarloConfig {
    std::size_t n = 1;               ///< number of rotate-then-measure stages
    std::size_t photons = 1'000'000;
    std::uint64_t seed = 42;
    double total_angle = kHalfPi;    ///< radians spread across the N stages
    std::size_t chunk_size = 65'536; ///< photons per work unit
    std::size_t threads = 0;         ///< 0 = auto (see resolve_thread_count)

    void validate() const;
};

struct SurvivalEstimate {
    double mean = 0.0;        ///< surviving fraction
    double std_error = 0.0;   ///< binomial standard error of the mean
    std::size_t survivors = 0;
    std::size_t photons = 0;
};

/// Runs the experiment. The fate of photon k is a pure function of
/// (seed, k, stage), so results are bit-identical for any thread count.
SurvivalEstimate mc_survival(const MonteCarloConfig& cfg);

struct McCheck {
    SurvivalEstimate estimate;
    double exact = 0.0;    ///< closed-form survival ratio
    double z_score = 0.0;  ///< (mean - exact) / sqrt(exact(1-exact)/photons)
};

/// Runs the experiment and scores the estimate against the closed form.
McCheck mc_survival_exact_check(const MonteCarloConfig& cfg);

/// Repeated-trial study of rotator angle noise: each trial perturbs every
/// stage angle by an independent Gaussian error and propagates the chain.
struct JitterConfig {
    std::size_t n = 1;
    double sigma = 0.0;      ///< std deviation of the per-stage angle error, radians
    std::size_t trials = 1;
    std::uint64_t seed = 42;
    double total_angle = kHalfPi;

    void validate() const;
};

struct JitterResult {
    double mean_ratio = 0.0;  ///< mean of per-trial output/input intensity
    double std_dev = 0.0;     ///< sample standard deviation of the trial ratios
    std::size_t trials = 0;
};

JitterResult jittered_output(const JitterConfig& cfg);

}  // namespace zenoptics
