#pragma once

#include <vector>

namespace metafor::models {

// Teunter-Syntetos-Babai intermittent-demand method: separate exponential
// smoothing of demand probability and demand size with a grid-optimized
// smoothing pair; flat forecast of probability * size.
std::vector<double> tsb_forecast(const std::vector<double>& train, int horizon);

} // namespace metafor::models
