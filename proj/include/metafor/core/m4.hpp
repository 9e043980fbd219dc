#pragma once

#include "metafor/core/series.hpp"

#include <set>
#include <string>
#include <vector>

namespace metafor::core {

// Parses M4-style CSV: one row per series, id first, values left to right,
// trailing empty cells allowed. Frequency is supplied out of band. Series
// whose ids appear in `exclusions` are dropped.
std::vector<TimeSeries> parse_m4_csv(const std::string& text,
                                     Frequency frequency,
                                     const std::set<std::string>& exclusions = {});

std::string to_m4_csv(const std::vector<TimeSeries>& series);

} // namespace metafor::core
