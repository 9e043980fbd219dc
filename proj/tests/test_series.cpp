#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "metafor/core/expand.hpp"
#include "metafor/core/m4.hpp"
#include "metafor/core/series.hpp"
#include "metafor/util/errors.hpp"
#include "metafor/util/rng.hpp"

#include <cmath>

using namespace metafor;
using core::Frequency;

TEST_CASE("m4 csv parsing strips trailing empties") {
    auto series = core::parse_m4_csv("D1,10,11,12,,\n", Frequency::Daily);
    REQUIRE(series.size() == 1);
    CHECK(series[0].id == "D1");
    CHECK(series[0].values == std::vector<double>{10, 11, 12});
    CHECK(series[0].period() == 7);
}

TEST_CASE("m4 csv parse error names row and column") {
    CHECK_THROWS_WITH_AS(core::parse_m4_csv("D2,1,abc\n", Frequency::Daily),
                         "parse error at (row D2, col 3)", util::DataError);
}

TEST_CASE("m4 csv rejects empty series and applies exclusions") {
    CHECK_THROWS_AS(core::parse_m4_csv("D9\n", Frequency::Daily), util::DataError);
    auto series = core::parse_m4_csv("M19700,1,2\nM1,3,4\n", Frequency::Monthly, {"M19700", "M19505"});
    REQUIRE(series.size() == 1);
    CHECK(series[0].id == "M1");
}

TEST_CASE("first difference") {
    core::TimeSeries s{"x", Frequency::Monthly, {1, 3, 6}};
    CHECK(core::first_difference(s).values == std::vector<double>{2, 3});
    s.values = {5, 5, 5, 5};
    CHECK(core::first_difference(s).values == std::vector<double>{0, 0, 0});
    s.values = {2, 1, 4};
    CHECK(core::first_difference(s).values == std::vector<double>{-1, 3});
    s.values = {7};
    CHECK_THROWS_AS(core::first_difference(s), util::DataError);
}

TEST_CASE("log transform with shift rule") {
    core::TimeSeries s{"x", Frequency::Monthly, {1.0, std::exp(1.0), std::exp(2.0)}};
    auto t = core::log_transform(s);
    CHECK(t.values[0] == doctest::Approx(0.0));
    CHECK(t.values[1] == doctest::Approx(1.0));
    CHECK(t.values[2] == doctest::Approx(2.0));

    s.values = {0.0, std::exp(1.0) - 1.0};
    t = core::log_transform(s);
    CHECK(t.values[0] == doctest::Approx(0.0));
    CHECK(t.values[1] == doctest::Approx(1.0));

    s.values = {-1.0, 0.0};
    t = core::log_transform(s);
    CHECK(t.values[0] == doctest::Approx(0.0));
    CHECK(t.values[1] == doctest::Approx(std::log(2.0)));
}

TEST_CASE("eligible horizons") {
    CHECK(core::eligible_horizons(100, Frequency::Monthly) == std::vector<int>{6, 12});
    CHECK(core::eligible_horizons(3650, Frequency::Daily) ==
          std::vector<int>{15, 30, 90, 180, 365, 730});
    CHECK(core::eligible_horizons(19, Frequency::Weekly).empty());
}

TEST_CASE("eligible horizons is monotone in length") {
    util::Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = static_cast<Frequency>(rng.bounded(3));
        std::size_t n1 = 1 + rng.bounded(4000);
        std::size_t n2 = 1 + rng.bounded(4000);
        if (n1 > n2) std::swap(n1, n2);
        const auto h1 = core::eligible_horizons(n1, f);
        const auto h2 = core::eligible_horizons(n2, f);
        for (int h : h1) CHECK(std::find(h2.begin(), h2.end(), h) != h2.end());
    }
}

TEST_CASE("holdout split") {
    core::TimeSeries s{"x", Frequency::Monthly, {}};
    for (int i = 1; i <= 10; ++i) s.values.push_back(i);
    auto [train, test] = core::holdout_split(s, 2);
    CHECK(train.values.size() == 8);
    CHECK(test == std::vector<double>{9, 10});
    CHECK_THROWS_AS(core::holdout_split(s, 3), util::DataError);

    s.values.clear();
    for (int i = 1; i <= 20; ++i) s.values.push_back(i);
    auto [train2, test2] = core::holdout_split(s, 4);
    CHECK(train2.values.size() == 16);
    CHECK(test2.size() == 4);
}

namespace {

core::TimeSeries make_series(const std::string& id, Frequency f, std::size_t n, util::Rng& rng) {
    core::TimeSeries s{id, f, {}};
    s.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) s.values.push_back(100.0 + rng.normal());
    return s;
}

} // namespace

TEST_CASE("initial expansion count equals sum of eligible horizons") {
    util::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<core::TimeSeries> series;
        std::size_t expected = 0;
        const auto count = 1 + rng.bounded(8);
        for (std::size_t i = 0; i < count; ++i) {
            const auto f = static_cast<Frequency>(rng.bounded(3));
            const std::size_t n = 10 + rng.bounded(800);
            series.push_back(make_series("s" + std::to_string(i), f, n, rng));
            expected += core::eligible_horizons(n, f).size();
        }
        CHECK(core::expand_initial(series).size() == expected);
    }
}

TEST_CASE("augmented expansion adds per-half eligible segments") {
    util::Rng rng(13);
    auto s = make_series("m", Frequency::Monthly, 100, rng);
    const auto initial = core::expand_initial({s});
    CHECK(initial.size() == 2); // h=6 and h=12
    const auto augmented = core::expand_augmented({s});
    CHECK(augmented.size() == 4); // halves of length 50 admit h=6 each
    int older = 0, newer = 0;
    for (const auto& m : augmented) {
        if (m.split_kind == core::SplitKind::OlderHalf) ++older;
        if (m.split_kind == core::SplitKind::NewerHalf) ++newer;
    }
    CHECK(older == 1);
    CHECK(newer == 1);
}

TEST_CASE("materialized segments are contiguous slices of the source") {
    util::Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = static_cast<Frequency>(rng.bounded(3));
        auto s = make_series("s", f, 30 + rng.bounded(400), rng);
        for (const auto& meta : core::expand_augmented({s})) {
            const auto seg = core::materialize(meta, s);
            CHECK(seg.train.size() == meta.train_len);
            CHECK(seg.test.size() == static_cast<std::size_t>(meta.horizon));
            CHECK(seg.train.values.size() >= 4 * seg.test.size()); // 80/20 rule

            std::vector<double> joined = seg.train.values;
            joined.insert(joined.end(), seg.test.begin(), seg.test.end());
            std::size_t offset = 0;
            if (meta.split_kind == core::SplitKind::NewerHalf) offset = s.size() / 2;
            for (std::size_t i = 0; i < joined.size(); ++i) CHECK(joined[i] == s.values[offset + i]);
        }
    }
}

TEST_CASE("segment metadata round trips through csv") {
    util::Rng rng(23);
    auto s1 = make_series("a", Frequency::Daily, 200, rng);
    auto s2 = make_series("b", Frequency::Weekly, 150, rng);
    const auto metas = core::expand_augmented({s1, s2});
    const auto parsed = core::segments_from_csv(core::segments_to_csv(metas));
    REQUIRE(parsed.size() == metas.size());
    for (std::size_t i = 0; i < metas.size(); ++i) {
        CHECK(parsed[i].segment_id == metas[i].segment_id);
        CHECK(parsed[i].train_len == metas[i].train_len);
        CHECK(parsed[i].horizon == metas[i].horizon);
        CHECK(parsed[i].split_kind == metas[i].split_kind);
    }
}
