#include "zenoptics/stochastic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "zenoptics/elements.hpp"
#include "zenoptics/parallel.hpp"
#include "zenoptics/rng.hpp"
#include "zenoptics/zeno.hpp"

namespace zenoptics {

void MonteCarloConfig::validate() const {
    if (n == 0) throw std::invalid_argument("MonteCarloConfig: n must be positive");
    if (photons == 0) throw std::invalid_argument("MonteCarloConfig: photons must be positive");
    if (chunk_size == 0)
        throw std::invalid_argument("MonteCarloConfig: chunk_size must be positive");
    if (!std::isfinite(total_angle))
        throw std::invalid_argument("MonteCarloConfig: total_angle must be finite");
}

namespace {

// Photon k dies at the first stage whose draw exceeds the per-stage
// transmission probability. Everything depends only on (seed, k, stage).
std::size_t count_chunk_survivors(const MonteCarloConfig& cfg, double p, std::size_t first,
                                  std::size_t last) {
    std::size_t survivors = 0;
    for (std::size_t k = first; k < last; ++k) {
        bool alive = true;
        for (std::size_t s = 0; s < cfg.n; ++s) {
            if (!(rng::uniform01(cfg.seed, k, s) < p)) {
                alive = false;
                break;
            }
        }
        survivors += alive ? 1 : 0;
    }
    return survivors;
}

}  // namespace

SurvivalEstimate mc_survival(const MonteCarloConfig& cfg) {
    cfg.validate();
    const double c = cos_angle(cfg.total_angle / static_cast<double>(cfg.n));
    const double p = c * c;

    const std::size_t chunks = (cfg.photons + cfg.chunk_size - 1) / cfg.chunk_size;
    std::vector<std::size_t> counts(chunks, 0);
    const std::size_t workers = std::min(resolve_thread_count(cfg.threads), chunks);

    std::atomic<std::size_t> next{0};
    auto drain = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1, std::memory_order_relaxed);
            if (idx >= chunks) return;
            const std::size_t first = idx * cfg.chunk_size;
            const std::size_t last = std::min(first + cfg.chunk_size, cfg.photons);
            counts[idx] = count_chunk_survivors(cfg, p, first, last);
        }
    };

    if (workers <= 1) {
        drain();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(drain);
        for (auto& t : pool) t.join();
    }

    std::size_t survivors = 0;
    for (std::size_t chunk_count : counts) survivors += chunk_count;

    SurvivalEstimate est;
    est.survivors = survivors;
    est.photons = cfg.photons;
    est.mean = static_cast<double>(survivors) / static_cast<double>(cfg.photons);
    est.std_error =
        std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(cfg.photons));
    return est;
}

McCheck mc_survival_exact_check(const MonteCarloConfig& cfg) {
    McCheck check;
    check.estimate = mc_survival(cfg);
    check.exact = zeno_ratio(cfg.n, cfg.total_angle);
    // One-sample proportion test: scale by the spread implied by the exact value.
    const double se =
        std::sqrt(check.exact * (1.0 - check.exact) / static_cast<double>(cfg.photons));
    if (se == 0.0) {
        if (check.estimate.mean == check.exact) {
            check.z_score = 0.0;
        } else {
            check.z_score = std::copysign(std::numeric_limits<double>::infinity(),
                                          check.estimate.mean - check.exact);
        }
    } else {
        check.z_score = (check.estimate.mean - check.exact) / se;
    }
    return check;
}

void JitterConfig::validate() const {
    if (n == 0) throw std::invalid_argument("JitterConfig: n must be positive");
    if (trials == 0) throw std::invalid_argument("JitterConfig: trials must be positive");
    if (!(sigma >= 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("JitterConfig: sigma must be non-negative and finite");
    if (!std::isfinite(total_angle))
        throw std::invalid_argument("JitterConfig: total_angle must be finite");
}

JitterResult jittered_output(const JitterConfig& cfg) {
    cfg.validate();
    JitterResult res;
    res.trials = cfg.trials;

    if (cfg.sigma == 0.0) {
        // No noise: every trial is the ideal measured chain.
        res.mean_ratio = zeno_ratio(cfg.n, cfg.total_angle);
        res.std_dev = 0.0;
        return res;
    }

    const double step = cfg.total_angle / static_cast<double>(cfg.n);
    const double seg_length = 1.0 / static_cast<double>(cfg.n);

    std::vector<double> ratios(cfg.trials);
    double sum = 0.0;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        ElementChain chain;
        chain.input = JonesVector::linear_polarized(1.0, kHalfPi);
        chain.elements.reserve(2 * cfg.n);
        for (std::size_t i = 0; i < cfg.n; ++i) {
            const double eps = cfg.sigma * rng::gaussian(cfg.seed, t, i);
            chain.elements.push_back(FaradayRotator{step + eps, seg_length});
            chain.elements.push_back(LinearPolarizer{kHalfPi, 0.0});
        }
        const double ratio = intensity(propagate(chain).output);
        ratios[t] = ratio;
        sum += ratio;
    }

    res.mean_ratio = sum / static_cast<double>(cfg.trials);
    double ss = 0.0;
    for (double r : ratios) {
        const double d = r - res.mean_ratio;
        ss += d * d;
    }
    res.std_dev =
        cfg.trials > 1 ? std::sqrt(ss / static_cast<double>(cfg.trials - 1)) : 0.0;
    return res;
}

}  // namespace zenoptics
