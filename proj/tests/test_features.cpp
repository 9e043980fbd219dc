#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "metafor/core/series.hpp"
#include "metafor/core/tsmath.hpp"
#include "metafor/features/catch22.hpp"
#include "metafor/features/groups.hpp"
#include "metafor/features/meta.hpp"
#include "metafor/features/registry.hpp"
#include "metafor/util/errors.hpp"
#include "metafor/util/rng.hpp"

#include <cmath>
#include <cstring>

using namespace metafor;
using core::Frequency;

namespace {

core::TimeSeries monthly(std::vector<double> v) {
    return core::TimeSeries{"t", Frequency::Monthly, std::move(v)};
}

double feature(const std::vector<double>& vec, const std::string& column) {
    return vec[features::FeatureRegistry::instance().index_of(column)];
}

std::vector<double> gaussian(std::size_t n, uint64_t seed, double mean = 0.0, double sd = 1.0) {
    util::Rng rng(seed);
    std::vector<double> v(n);
    for (auto& x : v) x = rng.normal(mean, sd);
    return v;
}

} // namespace

TEST_CASE("registry shape") {
    const auto& reg = features::FeatureRegistry::instance();
    CHECK(reg.base_names().size() == 65);
    CHECK(reg.column_names().size() == 195);
    CHECK(reg.column_names().front() == "orig.histogram_mode_5");
    CHECK(reg.index_of("log.is_constant") == 194);
    CHECK_THROWS_AS(reg.index_of("orig.nope"), util::UsageError);
}

TEST_CASE("feature extraction is deterministic to the bit") {
    const auto y = gaussian(200, 3, 10.0, 2.0);
    const auto a = features::compute_features(monthly(y));
    const auto b = features::compute_features(monthly(y));
    REQUIRE(a.size() == b.size());
    CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

TEST_CASE("constant series degenerate table") {
    const auto f = features::compute_features(monthly(std::vector<double>(50, 4.0)));
    CHECK(feature(f, "orig.is_constant") == 1.0);
    CHECK(feature(f, "diff.is_constant") == 1.0);
    CHECK(feature(f, "log.is_constant") == 1.0);
    CHECK(feature(f, "orig.longest_flat_run") == 50.0);
    CHECK(feature(f, "orig.flat_spots_fraction") == 1.0);
    CHECK(feature(f, "orig.acf1") == 0.0);
    CHECK(feature(f, "orig.spectral_entropy") == 0.0);
    CHECK(feature(f, "orig.sample_entropy") == 0.0);
    CHECK(feature(f, "orig.trend_strength") == 0.0);
    CHECK(feature(f, "orig.seasonal_strength") == 0.0);
    CHECK(feature(f, "orig.crossing_points_fraction") == 0.0);
    // diff of a ramp is constant: the flag marks the variant, not the source
    std::vector<double> ramp(30);
    for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = 2.0 * static_cast<double>(i);
    const auto g = features::compute_features(monthly(ramp));
    CHECK(feature(g, "orig.is_constant") == 0.0);
    CHECK(feature(g, "diff.is_constant") == 1.0);
}

TEST_CASE("white noise reference bands") {
    for (uint64_t seed : {1, 2, 3, 4, 5}) {
        const auto f = features::compute_features(monthly(gaussian(1000, seed, 50, 5)));
        CHECK(feature(f, "orig.spectral_entropy") > 0.9);
        CHECK(feature(f, "orig.hurst_rs") > 0.4);
        CHECK(feature(f, "orig.hurst_rs") < 0.6);
        CHECK(std::fabs(feature(f, "orig.acf1")) < 0.08);
        CHECK(feature(f, "orig.trend_strength") <= 0.2);
        CHECK(std::fabs(feature(f, "orig.skewness")) < 0.2);
        CHECK(feature(f, "orig.kurtosis") == doctest::Approx(3.0).epsilon(0.5 / 3.0));
    }
}

TEST_CASE("linear ramp reference values") {
    std::vector<double> ramp(100);
    for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = static_cast<double>(i + 1);
    const auto f = features::compute_features(monthly(ramp));
    CHECK(feature(f, "orig.acf1") >= 0.95);
    CHECK(feature(f, "orig.trend_strength") >= 0.99);
    CHECK(feature(f, "orig.linearity") > 0.0);
}

TEST_CASE("pure seasonal pattern") {
    std::vector<double> sine(120);
    for (std::size_t t = 0; t < sine.size(); ++t) {
        sine[t] = 100.0 + 20.0 * std::sin(2.0 * M_PI * static_cast<double>(t % 12) / 12.0);
    }
    const auto f = features::compute_features(monthly(sine));
    CHECK(feature(f, "orig.seasonal_strength") >= 0.99);
    CHECK(feature(f, "orig.spectral_entropy") <= 0.3);
    CHECK(feature(f, "orig.seasonal_peak") == 4.0);
    CHECK(feature(f, "orig.seasonal_trough") == 10.0);
    CHECK(feature(f, "orig.acf_seasonal") > 0.85); // (n-m)/n for a pure cycle

}

TEST_CASE("alternating and anomaly references") {
    std::vector<double> alternating;
    for (int i = 0; i < 100; ++i) alternating.push_back(i % 2 == 0 ? 1.0 : -1.0);
    const auto sh = features::shape_stats(alternating, 12);
    CHECK(sh.crossing_points_fraction == 1.0);

    std::vector<double> spike(100, 0.0);
    spike[99] = 100.0;
    const auto an = features::anomaly_stats(spike, 12);
    CHECK(an.tukey_mad_fraction == doctest::Approx(0.01).epsilon(1e-12));

    const auto an_const = features::anomaly_stats(std::vector<double>(100, 5.0), 12);
    CHECK(an_const.tukey_mad_fraction == 0.0);
    CHECK(an_const.iqr_fraction == 0.0);
    CHECK(std::isnan(an_const.last_anomaly_pos_rel));
}

TEST_CASE("injected spikes show up in the iqr fraction") {
    // bounded noise keeps the 1.5 IQR fences clean of false positives
    util::Rng rng(11);
    std::vector<double> y(200);
    for (auto& v : y) v = 100.0 + rng.uniform(-3.0, 3.0);
    // five spikes outside the fences but small enough not to ring the trend
    for (std::size_t idx : {20u, 60u, 100u, 140u, 180u}) y[idx] += 20.0;
    const auto an = features::anomaly_stats(y, 12);
    CHECK(std::fabs(an.iqr_fraction - 0.025) <= 0.01);
    CHECK(an.iqr_fraction_pos >= an.iqr_fraction_neg);
    CHECK(an.last_anomaly_pos_rel > 0.85); // the spike at index 180
}

TEST_CASE("scale and shift behaviour") {
    util::Rng rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        const auto y = gaussian(150, 100 + static_cast<uint64_t>(trial), 50, 5);
        const double a = rng.uniform(0.5, 4.0);
        const double b = rng.uniform(-10, 10);
        std::vector<double> scaled(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) scaled[i] = a * y[i] + b;

        // affine-invariant features
        const auto cy = features::complexity_stats(y);
        const auto cs = features::complexity_stats(scaled);
        CHECK(cs.spectral_entropy == doctest::Approx(cy.spectral_entropy).epsilon(1e-9));
        CHECK(cs.hurst_rs == doctest::Approx(cy.hurst_rs).epsilon(1e-9));

        const auto shy = features::shape_stats(y, 12);
        const auto shs = features::shape_stats(scaled, 12);
        CHECK(shs.crossing_points_fraction == doctest::Approx(shy.crossing_points_fraction));

        CHECK(core::acf(scaled, 1)[0] == doctest::Approx(core::acf(y, 1)[0]).epsilon(1e-9));
    }
}

TEST_CASE("diff variant is invariant under level shifts") {
    const auto y = gaussian(120, 31, 100, 3);
    std::vector<double> shifted(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) shifted[i] = y[i] + 250.0;
    const auto fa = features::compute_features(monthly(y));
    const auto fb = features::compute_features(monthly(shifted));
    const auto& reg = features::FeatureRegistry::instance();
    for (const auto& base : reg.base_names()) {
        const double va = fa[reg.index_of("diff." + base)];
        const double vb = fb[reg.index_of("diff." + base)];
        if (std::isnan(va)) {
            CHECK(std::isnan(vb));
        } else {
            CHECK(vb == doctest::Approx(va).epsilon(1e-7));
        }
    }
}

TEST_CASE("short series degrade to documented NaN, below 8 is an error") {
    const auto f = features::compute_features(monthly(gaussian(9, 41, 10, 1)));
    CHECK(std::isnan(feature(f, "orig.adf_stat")));       // needs 10
    CHECK(std::isnan(feature(f, "orig.hurst_rs")));       // needs 16
    CHECK(std::isnan(feature(f, "orig.sample_entropy"))); // needs 16
    CHECK(std::isnan(feature(f, "orig.seasonal_strength"))); // needs 2 periods
    CHECK(!std::isnan(feature(f, "orig.acf1")));
    CHECK_THROWS_AS(features::compute_features(monthly({1, 2, 3, 4, 5, 6, 7})), util::DataError);
}

TEST_CASE("meta columns") {
    CHECK(features::meta_column_names() ==
          std::vector<std::string>{"horizon", "is_daily", "is_weekly", "is_monthly"});
    const auto v = features::meta_column_values(12, Frequency::Monthly);
    CHECK(v == std::vector<double>{12, 0, 0, 1});

    const auto names = features::model_column_names();
    CHECK(names.size() == 19); // 16 one-hot + 3 capability flags
    const auto row = features::model_column_values(models::catalog_spec("STL-ARIMA"));
    double ones = 0;
    for (std::size_t i = 0; i < 16; ++i) ones += row[i];
    CHECK(ones == 1.0);
    CHECK(row[16] == 1.0); // seasonal
    CHECK(row[17] == 1.0); // complex
    CHECK(row[18] == 1.0); // decomposition
}

TEST_CASE("catch22-style calculators behave on simple signals") {
    // longest stretch above the mean of a two-level square wave
    std::vector<double> square;
    for (int rep = 0; rep < 10; ++rep) {
        for (int i = 0; i < 5; ++i) square.push_back(1.0);
        for (int i = 0; i < 5; ++i) square.push_back(-1.0);
    }
    auto ctx = features::make_context(square);
    CHECK(features::longest_stretch_above_mean(ctx) == 5.0);

    // monotone decreasing series: one long decreasing stretch
    std::vector<double> down(30);
    for (std::size_t i = 0; i < down.size(); ++i) down[i] = 100.0 - static_cast<double>(i);
    auto ctx2 = features::make_context(down);
    CHECK(features::longest_stretch_decreasing(ctx2) == 29.0);

    // periodicity detector finds the 12-cycle
    std::vector<double> sine(144);
    for (std::size_t t = 0; t < sine.size(); ++t) {
        sine[t] = std::sin(2.0 * M_PI * static_cast<double>(t) / 12.0);
    }
    auto ctx3 = features::make_context(sine);
    CHECK(features::periodicity_wang(ctx3) == doctest::Approx(12.0).epsilon(0.1));

    // pnn40 of slow drift is 0, of wild jumps is 1
    std::vector<double> slow(100);
    for (std::size_t i = 0; i < slow.size(); ++i) slow[i] = static_cast<double>(i) * 1e-5;
    auto ctx4 = features::make_context(slow);
    CHECK(features::pnn40(ctx4) <= 0.05);
}
