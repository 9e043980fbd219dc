#include "metafor/core/series.hpp"
#include "metafor/util/errors.hpp"

#include <algorithm>
#include <cmath>

namespace metafor::core {

int period_of(Frequency f) {
    switch (f) {
    case Frequency::Daily: return 7;
    case Frequency::Weekly: return 52;
    case Frequency::Monthly: return 12;
    }
    return 1;
}

const char* frequency_name(Frequency f) {
    switch (f) {
    case Frequency::Daily: return "daily";
    case Frequency::Weekly: return "weekly";
    case Frequency::Monthly: return "monthly";
    }
    return "?";
}

Frequency frequency_from_name(const std::string& name) {
    if (name == "daily") return Frequency::Daily;
    if (name == "weekly") return Frequency::Weekly;
    if (name == "monthly") return Frequency::Monthly;
    throw util::UsageError("unknown frequency: " + name);
}

void validate(const TimeSeries& s) {
    if (s.values.empty()) throw util::DataError("series " + s.id + " is empty");
    for (double v : s.values) {
        if (!std::isfinite(v)) throw util::DataError("series " + s.id + " has a non-finite value");
    }
}

const char* split_kind_name(SplitKind k) {
    switch (k) {
    case SplitKind::Full: return "full";
    case SplitKind::OlderHalf: return "older_half";
    case SplitKind::NewerHalf: return "newer_half";
    }
    return "?";
}

SplitKind split_kind_from_name(const std::string& name) {
    if (name == "full") return SplitKind::Full;
    if (name == "older_half") return SplitKind::OlderHalf;
    if (name == "newer_half") return SplitKind::NewerHalf;
    throw util::DataError("unknown split kind: " + name);
}

const std::vector<int>& horizon_grid(Frequency f) {
    static const std::vector<int> daily{15, 30, 90, 180, 365, 730};
    static const std::vector<int> weekly{4, 13, 26, 52, 104};
    static const std::vector<int> monthly{6, 12, 24, 60, 120};
    switch (f) {
    case Frequency::Daily: return daily;
    case Frequency::Weekly: return weekly;
    case Frequency::Monthly: return monthly;
    }
    return monthly;
}

std::vector<int> eligible_horizons(std::size_t n, Frequency f) {
    std::vector<int> out;
    for (int h : horizon_grid(f)) {
        if (n >= static_cast<std::size_t>(5) * static_cast<std::size_t>(h)) out.push_back(h);
    }
    return out;
}

TimeSeries first_difference(const TimeSeries& s) {
    if (s.size() < 2) throw util::DataError("first_difference needs at least 2 observations");
    TimeSeries out;
    out.id = s.id;
    out.frequency = s.frequency;
    out.values.resize(s.size() - 1);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) out.values[i] = s.values[i + 1] - s.values[i];
    return out;
}

TimeSeries log_transform(const TimeSeries& s) {
    if (s.values.empty()) throw util::DataError("log_transform needs at least 1 observation");
    TimeSeries out;
    out.id = s.id;
    out.frequency = s.frequency;
    out.values.resize(s.size());
    const double lo = *std::min_element(s.values.begin(), s.values.end());
    const double shift = lo > 0.0 ? 0.0 : 1.0 - lo;
    for (std::size_t i = 0; i < s.size(); ++i) out.values[i] = std::log(s.values[i] + shift);
    return out;
}

std::pair<TimeSeries, std::vector<double>> holdout_split(const TimeSeries& s, int horizon) {
    if (horizon < 1) throw util::DataError("horizon must be positive");
    if (s.size() < static_cast<std::size_t>(5) * static_cast<std::size_t>(horizon)) {
        throw util::DataError("series " + s.id + " too short for horizon " + std::to_string(horizon));
    }
    TimeSeries train;
    train.id = s.id;
    train.frequency = s.frequency;
    train.values.assign(s.values.begin(), s.values.end() - horizon);
    std::vector<double> test(s.values.end() - horizon, s.values.end());
    return {std::move(train), std::move(test)};
}

} // namespace metafor::core
