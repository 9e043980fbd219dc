#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "metafor/core/series.hpp"
#include "metafor/models/decompose.hpp"
#include "metafor/models/pool.hpp"
#include "metafor/models/smoothing.hpp"
#include "metafor/models/theta.hpp"
#include "metafor/models/tsb.hpp"
#include "metafor/util/errors.hpp"
#include "metafor/util/rng.hpp"

#include <cmath>
#include <set>

using namespace metafor;
using core::Frequency;

namespace {

core::TimeSeries monthly(std::vector<double> values, const std::string& id = "t") {
    return core::TimeSeries{id, Frequency::Monthly, std::move(values)};
}

std::vector<double> sine_seasonal(std::size_t n, double level, double amp, double trend = 0.0,
                                  double noise_sd = 0.0, uint64_t seed = 1) {
    util::Rng rng(seed);
    std::vector<double> v(n);
    for (std::size_t t = 0; t < n; ++t) {
        v[t] = level + trend * static_cast<double>(t) +
               amp * std::sin(2.0 * M_PI * static_cast<double>(t % 12) / 12.0) +
               (noise_sd > 0 ? rng.normal(0, noise_sd) : 0.0);
    }
    return v;
}

} // namespace

TEST_CASE("pool catalog shape and flags") {
    const auto& catalog = models::pool_catalog();
    CHECK(catalog.size() == 16);
    std::set<std::string> ids;
    for (const auto& spec : catalog) ids.insert(spec.model_id);
    CHECK(ids.size() == 16);

    CHECK(models::catalog_spec("SNaive").seasonal);
    CHECK_FALSE(models::catalog_spec("SNaive").complex_model);
    CHECK(models::catalog_spec("STL-ARIMA").decomposition);
    CHECK(models::catalog_spec("ARIMA").complex_model);
    CHECK_FALSE(models::catalog_spec("ARIMA").seasonal);
    CHECK(models::catalog_spec("SARIMA").seasonal);
    CHECK_THROWS_AS(models::catalog_spec("Prophet"), util::UsageError);
}

TEST_CASE("naive, snaive, drift and trend models are exact on closed forms") {
    auto out = models::fit_and_forecast("Naive", monthly({1, 2, 3}), 2);
    CHECK(out.point_forecast == std::vector<double>{3, 3});
    CHECK(out.status == models::ForecastStatus::Ok);

    std::vector<double> two_periods;
    for (int rep = 0; rep < 2; ++rep) {
        for (int i = 1; i <= 12; ++i) two_periods.push_back(i);
    }
    out = models::fit_and_forecast("SNaive", monthly(two_periods), 12);
    for (int i = 0; i < 12; ++i) CHECK(out.point_forecast[static_cast<size_t>(i)] == i + 1);

    out = models::fit_and_forecast("LinTrend", monthly({2, 4, 6, 8}), 2);
    CHECK(out.point_forecast[0] == doctest::Approx(10.0).epsilon(1e-9));
    CHECK(out.point_forecast[1] == doctest::Approx(12.0).epsilon(1e-9));

    out = models::fit_and_forecast("Drift", monthly({1, 2, 3, 4}), 3);
    CHECK(out.point_forecast[0] == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(out.point_forecast[2] == doctest::Approx(7.0).epsilon(1e-12));

    out = models::fit_and_forecast("QuadTrend", monthly({1, 4, 9, 16, 25, 36}), 2);
    CHECK(out.point_forecast[0] == doctest::Approx(49.0).epsilon(1e-7));
    CHECK(out.point_forecast[1] == doctest::Approx(64.0).epsilon(1e-7));
}

TEST_CASE("theta on constant and ramp") {
    const auto constant = models::theta_forecast(std::vector<double>(30, 5.0), 12, 6);
    for (double v : constant) CHECK(v == doctest::Approx(5.0).epsilon(1e-9));

    std::vector<double> ramp(60);
    for (std::size_t t = 0; t < ramp.size(); ++t) ramp[t] = 3.0 + 2.0 * static_cast<double>(t);
    const auto f = models::theta_forecast(ramp, 12, 8);
    // drift contributes half the slope per step beyond the SES level
    for (std::size_t k = 1; k < f.size(); ++k) {
        CHECK(f[k] - f[k - 1] == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("theta reseasonalizes a seasonal pattern") {
    const auto y = sine_seasonal(120, 100.0, 20.0);
    const auto f = models::theta_forecast(y, 12, 12);
    // correlation with the final observed cycle
    std::vector<double> last(y.end() - 12, y.end());
    double mf = 0, ml = 0;
    for (int i = 0; i < 12; ++i) {
        mf += f[static_cast<size_t>(i)] / 12.0;
        ml += last[static_cast<size_t>(i)] / 12.0;
    }
    double num = 0, df = 0, dl = 0;
    for (int i = 0; i < 12; ++i) {
        const double a = f[static_cast<size_t>(i)] - mf;
        const double b = last[static_cast<size_t>(i)] - ml;
        num += a * b;
        df += a * a;
        dl += b * b;
    }
    CHECK(num / std::sqrt(df * dl) > 0.95);
}

TEST_CASE("comb sits between its flat and trending members on a ramp") {
    std::vector<double> ramp(40);
    for (std::size_t t = 0; t < ramp.size(); ++t) ramp[t] = 10.0 + 1.5 * static_cast<double>(t);
    const auto comb = models::comb_forecast(ramp, 12, 6);
    const auto flat = models::ses(ramp, 6).forecast;
    const auto trending = models::holt(ramp, 6).forecast;
    for (std::size_t k = 0; k < comb.size(); ++k) {
        CHECK(comb[k] >= flat[k] - 1e-6);
        CHECK(comb[k] <= trending[k] + 1e-6);
    }
    const auto constant = models::comb_forecast(std::vector<double>(30, 4.0), 12, 4);
    for (double v : constant) CHECK(v == doctest::Approx(4.0).epsilon(1e-8));
}

TEST_CASE("tsb steady states") {
    const auto zeros = models::tsb_forecast(std::vector<double>(20, 0.0), 5);
    for (double v : zeros) CHECK(v == 0.0);

    const auto threes = models::tsb_forecast(std::vector<double>(20, 3.0), 5);
    for (double v : threes) CHECK(v == doctest::Approx(3.0).epsilon(1e-9));

    std::vector<double> alternating;
    for (int i = 0; i < 40; ++i) alternating.push_back(i % 2 == 0 ? 3.0 : 0.0);
    const auto f = models::tsb_forecast(alternating, 5);
    CHECK(f[0] == doctest::Approx(1.5).epsilon(0.15));
}

TEST_CASE("ets family selection") {
    const auto constant = models::ets_family(std::vector<double>(30, 7.0), 12, 4);
    CHECK(constant.name == "SES");
    for (double v : constant.forecast) CHECK(v == doctest::Approx(7.0).epsilon(1e-9));

    const auto y = sine_seasonal(72, 50.0, 10.0, 0.5);
    const auto seasonal = models::holt_winters_additive(y, 12, 12);
    CHECK(seasonal.sse / 72.0 < 1e-4); // noiseless pattern reproduced

    util::Rng rng(5);
    std::vector<double> noisy(50);
    for (auto& v : noisy) v = rng.normal(20, 2);
    for (const auto* fit : {&constant}) {
        (void)fit;
    }
    const auto chosen = models::ets_family(noisy, 12, 6);
    CHECK(chosen.params[0] >= 1e-4);
    CHECK(chosen.params[0] <= 0.9999);
}

TEST_CASE("stl hybrids reconstruct constructed seasonal cases") {
    // trend-aware inners on noiseless seasonal + trend
    {
        const auto y = sine_seasonal(96, 100.0, 15.0, 1.0);
        core::TimeSeries train = monthly(std::vector<double>(y.begin(), y.end() - 12));
        std::vector<double> actual(y.end() - 12, y.end());
        const double range = 30.0 + 95.0; // amplitude span + trend span
        for (const char* id : {"STL-ARIMA", "STL-ETS"}) {
            const auto out = models::fit_and_forecast(id, train, 12);
            REQUIRE(out.status == models::ForecastStatus::Ok);
            for (int k = 0; k < 12; ++k) {
                CHECK(std::fabs(out.point_forecast[static_cast<size_t>(k)] -
                                actual[static_cast<size_t>(k)]) < 0.01 * range);
            }
        }
    }
    // theta inner on a level seasonal pattern (its drift halves any slope)
    {
        const auto y = sine_seasonal(96, 100.0, 15.0, 0.0);
        core::TimeSeries train = monthly(std::vector<double>(y.begin(), y.end() - 12));
        std::vector<double> actual(y.end() - 12, y.end());
        const auto out = models::fit_and_forecast("STL-Theta", train, 12);
        REQUIRE(out.status == models::ForecastStatus::Ok);
        for (int k = 0; k < 12; ++k) {
            CHECK(std::fabs(out.point_forecast[static_cast<size_t>(k)] -
                            actual[static_cast<size_t>(k)]) < 0.01 * 30.0);
        }
    }

    // shorter than two periods: identical to the inner model
    std::vector<double> short_series{5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18};
    const auto hybrid = models::stl_hybrid_forecast(short_series, 12, 4, models::StlInner::Theta);
    const auto inner = models::theta_forecast(short_series, 12, 4);
    CHECK(hybrid == inner);

    // zero seasonal component: hybrid equals the inner model on the original
    std::vector<double> flatline(48, 20.0);
    const auto h2 = models::stl_hybrid_forecast(flatline, 12, 6, models::StlInner::Ets);
    const auto i2 = models::ets_family(flatline, 12, 6, false).forecast;
    for (std::size_t k = 0; k < h2.size(); ++k) CHECK(h2[k] == doctest::Approx(i2[k]).epsilon(1e-9));
}

TEST_CASE("seasonal adjustment wrapper") {
    // strong pattern: active, adjusted nearly constant
    const auto y = sine_seasonal(96, 100.0, 25.0);
    const auto adj = models::seasonal_adjustment(y, 12);
    CHECK(adj.active);
    double lo = 1e18, hi = -1e18;
    for (double v : adj.adjusted) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(hi - lo < 12.0); // raw range is 50

    // deseasonalize then reseasonalize restores the training window
    std::vector<double> reconstructed(adj.adjusted.size());
    for (std::size_t t = 0; t < adj.adjusted.size(); ++t) {
        const double idx = adj.indices[t % 12];
        reconstructed[t] = adj.multiplicative ? adj.adjusted[t] * idx : adj.adjusted[t] + idx;
    }
    for (std::size_t t = 0; t < y.size(); ++t) {
        CHECK(reconstructed[t] == doctest::Approx(y[t]).epsilon(1e-10));
    }

    // white noise: inactive in at least 90% of seeds
    int inactive = 0;
    for (uint64_t seed = 1; seed <= 200; ++seed) {
        util::Rng rng(seed);
        std::vector<double> noise(120);
        for (auto& v : noise) v = rng.normal(50, 5);
        if (!models::seasonal_adjustment(noise, 12).active) ++inactive;
    }
    CHECK(inactive >= 180);

    // wrapper forecasts round trip
    std::vector<double> flat(12, 1.0);
    const auto back = adj.reseasonalize(adj.reseasonalize(flat)); // idempotent shape only
    CHECK(back.size() == 12);
}

TEST_CASE("every pool member is total on awkward inputs") {
    util::Rng rng(9);
    std::vector<core::TimeSeries> inputs;
    inputs.push_back(monthly(std::vector<double>(24, 3.0)));          // constant
    inputs.push_back(monthly({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12})); // single period
    std::vector<double> intermittent(30, 0.0);
    for (std::size_t i = 0; i < intermittent.size(); i += 7) intermittent[i] = 5;
    inputs.push_back(monthly(intermittent));
    std::vector<double> noisy(40);
    for (auto& v : noisy) v = rng.normal(0, 1); // crosses zero: multiplicative guards
    inputs.push_back(monthly(noisy));
    inputs.push_back(core::TimeSeries{"w", Frequency::Weekly, std::vector<double>(60, 2.0)});
    std::vector<double> walk(80);
    double acc = 100;
    for (auto& v : walk) v = acc += rng.normal(0, 3);
    inputs.push_back(core::TimeSeries{"d", Frequency::Daily, walk});

    for (const auto& train : inputs) {
        for (const auto& spec : models::pool_catalog()) {
            const auto out = models::fit_and_forecast(spec.model_id, train, 6);
            REQUIRE(out.point_forecast.size() == 6);
            for (double v : out.point_forecast) CHECK(std::isfinite(v));
            CHECK(out.runtime_ms >= 0.0);
        }
    }
}

TEST_CASE("short series fall back to naive with the flag set") {
    const auto out = models::fit_and_forecast("ARIMA", monthly({1, 2, 3}), 2);
    CHECK(out.status == models::ForecastStatus::Fallback);
    CHECK(out.point_forecast == std::vector<double>{3, 3});
    CHECK_THROWS_AS(models::fit_and_forecast("NoSuchModel", monthly({1, 2, 3}), 2),
                    util::UsageError);
}

TEST_CASE("simple models are at least 10x faster than arima") {
    util::Rng rng(31);
    std::vector<double> y(1000);
    double acc = 500;
    for (auto& v : y) v = acc += rng.normal(0, 2);
    const auto train = monthly(y);

    // median over repeats to keep the comparison ordinal, not flaky
    auto med_runtime = [&](const char* id) {
        std::vector<double> times;
        for (int rep = 0; rep < 3; ++rep) times.push_back(models::fit_and_forecast(id, train, 6).runtime_ms);
        std::sort(times.begin(), times.end());
        return times[1];
    };
    const double arima_ms = med_runtime("ARIMA");
    for (const char* id : {"Naive", "SNaive", "Drift", "LinTrend"}) {
        CHECK(med_runtime(id) * 10.0 <= arima_ms);
    }
}
