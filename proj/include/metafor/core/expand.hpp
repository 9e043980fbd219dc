#pragma once

#include "metafor/core/series.hpp"

#include <map>
#include <string>
#include <vector>

namespace metafor::core {

// Lightweight segment descriptor; values are sliced from the source series
// on demand so large expansions stay cheap to hold and persist.
struct SegmentMeta {
    std::string segment_id;
    std::string source_id;
    SplitKind split_kind = SplitKind::Full;
    Frequency frequency = Frequency::Monthly;
    int horizon = 0;
    std::size_t train_len = 0;
};

std::string make_segment_id(const std::string& source_id, SplitKind kind, int horizon);

// One segment per (series, eligible horizon), test = last h observations.
std::vector<SegmentMeta> expand_initial(const std::vector<TimeSeries>& series);

// Initial expansion plus older/newer half splits, each half segmented at
// every horizon that satisfies the 80/20 rule on the half itself.
std::vector<SegmentMeta> expand_augmented(const std::vector<TimeSeries>& series);

// Slices train/test out of the source series for a segment descriptor.
Segment materialize(const SegmentMeta& meta, const TimeSeries& source);

std::string segments_to_csv(const std::vector<SegmentMeta>& segments);
std::vector<SegmentMeta> segments_from_csv(const std::string& text);

} // namespace metafor::core
