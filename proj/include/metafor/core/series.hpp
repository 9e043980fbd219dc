#pragma once

#include <string>
#include <vector>

namespace metafor::core {

enum class Frequency { Daily, Weekly, Monthly };

// Seasonal period implied by the sampling frequency.
int period_of(Frequency f);

const char* frequency_name(Frequency f);
Frequency frequency_from_name(const std::string& name);

struct TimeSeries {
    std::string id;
    Frequency frequency = Frequency::Monthly;
    std::vector<double> values;

    int period() const { return period_of(frequency); }
    std::size_t size() const { return values.size(); }
};

// Throws util::DataError on non-finite or empty input.
void validate(const TimeSeries& s);

enum class SplitKind { Full, OlderHalf, NewerHalf };

const char* split_kind_name(SplitKind k);
SplitKind split_kind_from_name(const std::string& name);

// One train/test holdout of a source series at a fixed horizon. The train
// part carries its own TimeSeries identity so downstream stages treat it as
// a standalone series.
struct Segment {
    std::string segment_id;
    std::string source_id;
    SplitKind split_kind = SplitKind::Full;
    int horizon = 0;
    TimeSeries train;
    std::vector<double> test;
};

// Candidate horizons per frequency, ascending.
const std::vector<int>& horizon_grid(Frequency f);

// Horizons h from the grid with n >= 5h (train at least 4x the test window).
std::vector<int> eligible_horizons(std::size_t n, Frequency f);

// result[i] = s[i+1] - s[i]; requires len >= 2.
TimeSeries first_difference(const TimeSeries& s);

// ln(x) when min > 0, else ln(x - min + 1) (shift keeps the transform total).
TimeSeries log_transform(const TimeSeries& s);

// test = last h values, train = prefix. Requires len >= 5h.
std::pair<TimeSeries, std::vector<double>> holdout_split(const TimeSeries& s, int horizon);

} // namespace metafor::core
