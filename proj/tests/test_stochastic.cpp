#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "reference_values.hpp"
#include "zenoptics/parallel.hpp"
#include "zenoptics/rng.hpp"
#include "zenoptics/stochastic.hpp"
#include "zenoptics/zeno.hpp"

using namespace zenoptics;
namespace ref = zenoptics::testref;

TEST_CASE("counter words are pure functions of their inputs") {
    CHECK(rng::counter_word(1, 2, 3) == rng::counter_word(1, 2, 3));
    CHECK(rng::counter_word(1, 2, 3) != rng::counter_word(1, 2, 4));
    CHECK(rng::counter_word(1, 2, 3) != rng::counter_word(1, 3, 3));
    CHECK(rng::counter_word(1, 2, 3) != rng::counter_word(2, 2, 3));
}

TEST_CASE("uniform draws live in [0,1) and average one half") {
    double sum = 0.0;
    for (std::uint64_t i = 0; i < 100'000; ++i) {
        const double u = rng::uniform01(7, 0, i);
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
    }
    CHECK(std::fabs(sum / 100'000 - 0.5) < 0.01);
}

TEST_CASE("gaussian draws have the right first two moments") {
    const std::uint64_t count = 200'000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::uint64_t i = 0; i < count; ++i) {
        const double g = rng::gaussian(11, 0, i);
        sum += g;
        sum_sq += g * g;
    }
    const double mean = sum / static_cast<double>(count);
    const double var = sum_sq / static_cast<double>(count) - mean * mean;
    CHECK(std::fabs(mean) < 0.01);
    CHECK(std::fabs(var - 1.0) < 0.02);
}

TEST_CASE("thread count resolution and the environment cap") {
    unsetenv("ZENOPTICS_THREADS");
    CHECK(resolve_thread_count(3) == 3);
    CHECK(resolve_thread_count(0) >= 1);

    setenv("ZENOPTICS_THREADS", "2", 1);
    CHECK(resolve_thread_count(8) == 2);
    CHECK(resolve_thread_count(1) == 1);  // cap never raises

    setenv("ZENOPTICS_THREADS", "garbage", 1);
    CHECK(resolve_thread_count(4) == 4);  // unparsable values are ignored
    setenv("ZENOPTICS_THREADS", "0", 1);
    CHECK(resolve_thread_count(4) == 4);
    unsetenv("ZENOPTICS_THREADS");
}

TEST_CASE("survival runs are bit-identical for any thread count") {
    MonteCarloConfig cfg;
    cfg.n = 8;
    cfg.photons = 300'000;
    cfg.seed = 42;

    cfg.threads = 1;
    const SurvivalEstimate one = mc_survival(cfg);
    cfg.threads = 2;
    const SurvivalEstimate two = mc_survival(cfg);
    cfg.threads = 8;
    const SurvivalEstimate eight = mc_survival(cfg);

    CHECK(one.survivors == two.survivors);
    CHECK(one.survivors == eight.survivors);
    CHECK(one.mean == two.mean);
    CHECK(one.mean == eight.mean);
}

TEST_CASE("survival handles ragged chunking") {
    MonteCarloConfig cfg;
    cfg.n = 2;
    cfg.photons = 100'001;  // not a multiple of the chunk size
    cfg.chunk_size = 4096;
    cfg.seed = 5;
    const SurvivalEstimate est = mc_survival(cfg);
    CHECK(est.photons == 100'001);
    CHECK(est.survivors <= est.photons);

    cfg.chunk_size = 1 << 30;  // single chunk larger than the run
    const SurvivalEstimate single = mc_survival(cfg);
    CHECK(single.survivors == est.survivors);
}

TEST_CASE("one crossed analyzer kills every photon") {
    MonteCarloConfig cfg;
    cfg.n = 1;
    cfg.photons = 50'000;
    const SurvivalEstimate est = mc_survival(cfg);
    CHECK(est.survivors == 0);
    CHECK(est.mean == 0.0);

    const McCheck check = mc_survival_exact_check(cfg);
    CHECK(check.exact == 0.0);
    CHECK(check.z_score == 0.0);
}

TEST_CASE("estimates sit within five standard errors of the closed form") {
    for (const std::size_t n : {2u, 8u, 16u}) {
        for (const std::uint64_t seed : {42ull, 7ull}) {
            MonteCarloConfig cfg;
            cfg.n = n;
            cfg.photons = 1'000'000;
            cfg.seed = seed;
            const McCheck check = mc_survival_exact_check(cfg);
            CHECK(std::isfinite(check.z_score));
            CHECK(std::fabs(check.z_score) < 5.0);
        }
    }
}

TEST_CASE("invalid Monte Carlo configurations are rejected") {
    MonteCarloConfig cfg;
    cfg.photons = 0;
    CHECK_THROWS_AS(mc_survival(cfg), std::invalid_argument);
    cfg.photons = 10;
    cfg.n = 0;
    CHECK_THROWS_AS(mc_survival(cfg), std::invalid_argument);
    cfg.n = 1;
    cfg.chunk_size = 0;
    CHECK_THROWS_AS(mc_survival(cfg), std::invalid_argument);
}

TEST_CASE("zero jitter collapses to the ideal chain") {
    JitterConfig cfg;
    cfg.n = 16;
    cfg.sigma = 0.0;
    cfg.trials = 25;
    const JitterResult res = jittered_output(cfg);
    CHECK(res.mean_ratio == zeno_ratio(16));
    CHECK(res.std_dev == 0.0);
    CHECK(res.trials == 25);
}

TEST_CASE("jitter runs are deterministic in the seed") {
    JitterConfig cfg;
    cfg.n = 8;
    cfg.sigma = 0.1;
    cfg.trials = 200;
    cfg.seed = 99;
    const JitterResult a = jittered_output(cfg);
    const JitterResult b = jittered_output(cfg);
    CHECK(a.mean_ratio == b.mean_ratio);
    CHECK(a.std_dev == b.std_dev);

    cfg.seed = 100;
    const JitterResult c = jittered_output(cfg);
    CHECK(a.mean_ratio != c.mean_ratio);
}

TEST_CASE("jitter sample mean matches the factorized expectation") {
    // E[cos^2(theta + eps)] = (1 + exp(-2 sigma^2) cos(2 theta)) / 2 per stage,
    // independent stages multiply.
    for (const double sigma : {0.05, 0.2}) {
        JitterConfig cfg;
        cfg.n = 16;
        cfg.sigma = sigma;
        cfg.trials = 10'000;
        cfg.seed = 42;
        const JitterResult res = jittered_output(cfg);
        const double expect =
            sigma == 0.05 ? ref::kJitterMean16Sigma005 : ref::kJitterMean16Sigma020;
        const double se = res.std_dev / std::sqrt(static_cast<double>(cfg.trials));
        INFO("sigma=" << sigma << " mean=" << res.mean_ratio << " expect=" << expect
                      << " se=" << se);
        CHECK(std::fabs(res.mean_ratio - expect) < 3.0 * se);
    }
}

TEST_CASE("invalid jitter configurations are rejected") {
    JitterConfig cfg;
    cfg.trials = 0;
    CHECK_THROWS_AS(jittered_output(cfg), std::invalid_argument);
    cfg.trials = 1;
    cfg.sigma = -0.1;
    CHECK_THROWS_AS(jittered_output(cfg), std::invalid_argument);
    cfg.sigma = 0.1;
    cfg.n = 0;
    CHECK_THROWS_AS(jittered_output(cfg), std::invalid_argument);
}
