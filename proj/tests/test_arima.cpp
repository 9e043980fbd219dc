#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "metafor/core/tsmath.hpp"
#include "metafor/models/arima.hpp"
#include "metafor/util/rng.hpp"

#include <cmath>

using namespace metafor;

namespace {

std::vector<double> simulate_ar1(double phi, double mean, std::size_t n, uint64_t seed) {
    util::Rng rng(seed);
    std::vector<double> y(n);
    double x = mean;
    for (std::size_t t = 0; t < n; ++t) {
        x = mean + phi * (x - mean) + rng.normal();
        y[t] = x;
    }
    return y;
}

std::vector<double> simulate_walk(std::size_t n, uint64_t seed, double drift = 0.0) {
    util::Rng rng(seed);
    std::vector<double> y(n);
    double x = 100.0;
    for (std::size_t t = 0; t < n; ++t) {
        x += drift + rng.normal();
        y[t] = x;
    }
    return y;
}

std::vector<double> simulate_noise(std::size_t n, uint64_t seed, double mean = 10.0) {
    util::Rng rng(seed);
    std::vector<double> y(n);
    for (auto& v : y) v = rng.normal(mean, 1.0);
    return y;
}

} // namespace

TEST_CASE("ar(1) recovered and forecast decays toward the mean") {
    const auto y = simulate_ar1(0.8, 50.0, 500, 42);
    const auto fit = models::auto_arima(y, 1, false, 40);
    CHECK(fit.fit.order.p >= 1);
    CHECK(fit.fit.order.d == 0);
    double mean = core::mean_of(y);
    CHECK(std::fabs(fit.forecast[39] - mean) < std::fabs(fit.forecast[0] - mean) + 0.5);
}

TEST_CASE("random walk selects first differencing in at least 90% of seeds") {
    int d1 = 0;
    const int seeds = 20;
    for (uint64_t s = 1; s <= seeds; ++s) {
        const auto y = simulate_walk(400, s);
        const auto fit = models::auto_arima(y, 1, false, 5);
        if (fit.fit.order.d >= 1) ++d1;
    }
    CHECK(d1 >= 18);
}

TEST_CASE("white noise collapses to a constant-mean model in most seeds") {
    int plain = 0;
    const int seeds = 20;
    for (uint64_t s = 100; s < 100 + seeds; ++s) {
        const auto y = simulate_noise(400, s);
        const auto fit = models::auto_arima(y, 1, false, 5);
        if (fit.fit.order.p == 0 && fit.fit.order.d == 0 && fit.fit.order.q == 0 &&
            fit.fit.order.constant) {
            ++plain;
            CHECK(fit.forecast[0] == doctest::Approx(10.0).epsilon(0.05));
        }
    }
    CHECK(plain > seeds / 2);
}

TEST_CASE("seasonal selection differences seasonally on strongly seasonal data") {
    util::Rng rng(7);
    std::vector<double> y(144);
    for (std::size_t t = 0; t < y.size(); ++t) {
        y[t] = 100.0 + 30.0 * std::sin(2.0 * M_PI * static_cast<double>(t % 12) / 12.0) +
               rng.normal(0, 1.0);
    }
    const auto fit = models::auto_arima(y, 12, true, 12);
    CHECK(fit.fit.order.sd == 1);
    // forecast keeps the seasonal phase
    double err = 0;
    for (int k = 0; k < 12; ++k) {
        const double want = 100.0 + 30.0 * std::sin(2.0 * M_PI * ((y.size() + k) % 12) / 12.0);
        err += std::fabs(fit.forecast[static_cast<size_t>(k)] - want);
    }
    CHECK(err / 12.0 < 5.0);
}

TEST_CASE("kpss separates noise from random walks") {
    int noise_small = 0;
    const int seeds = 60;
    for (uint64_t s = 1; s <= seeds; ++s) {
        if (core::kpss_statistic(simulate_noise(500, s), false) < 0.5) ++noise_small;
    }
    CHECK(noise_small >= 57); // >= 95% of seeds

    int walk_large = 0;
    for (uint64_t s = 1; s <= 20; ++s) {
        if (core::kpss_statistic(simulate_walk(500, s), false) > 1.0) ++walk_large;
    }
    CHECK(walk_large >= 18);
}

TEST_CASE("trend-kpss of a ramp sits below a random walk's") {
    std::vector<double> ramp(500);
    util::Rng rng(3);
    for (std::size_t t = 0; t < ramp.size(); ++t) ramp[t] = 2.0 * static_cast<double>(t) + rng.normal();
    const double ramp_stat = core::kpss_statistic(ramp, true);
    double walk_stat = 0;
    for (uint64_t s = 1; s <= 10; ++s) walk_stat += core::kpss_statistic(simulate_walk(500, s), true);
    walk_stat /= 10;
    CHECK(ramp_stat < walk_stat);
}

TEST_CASE("adf and pp point the right way") {
    const auto stationary = simulate_ar1(0.5, 0.0, 500, 11);
    const auto walk = simulate_walk(500, 11);
    CHECK(core::adf_statistic(stationary) < -3.0);
    CHECK(core::adf_statistic(walk) > -2.5);
    CHECK(core::pp_statistic(stationary) < core::pp_statistic(walk));
}

TEST_CASE("acf and pacf reference values") {
    // alternating series: lag-1 autocorrelation near -1
    std::vector<double> alt;
    for (int i = 0; i < 100; ++i) alt.push_back(i % 2 == 0 ? 1.0 : -1.0);
    CHECK(core::acf(alt, 1)[0] == doctest::Approx(-0.99).epsilon(0.01));

    // ramp: strong positive persistence
    std::vector<double> ramp(100);
    for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = static_cast<double>(i + 1);
    CHECK(core::acf(ramp, 1)[0] == doctest::Approx(0.97).epsilon(0.01));

    // iid noise: small lag-1 autocorrelation
    const auto noise = simulate_noise(1000, 77);
    CHECK(std::fabs(core::acf(noise, 1)[0]) < 0.08);

    // pacf of an AR(1) dies after lag 1
    const auto ar = simulate_ar1(0.8, 0.0, 2000, 5);
    const auto p = core::pacf(ar, 5);
    CHECK(p[0] == doctest::Approx(0.8).epsilon(0.08));
    for (std::size_t lag = 1; lag < 5; ++lag) CHECK(std::fabs(p[lag]) < 0.12);

    // zero variance: degenerate all-zero convention
    std::vector<double> flat(50, 3.0);
    for (double r : core::acf(flat, 5)) CHECK(r == 0.0);
}
