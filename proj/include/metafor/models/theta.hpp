#pragma once

#include <vector>

namespace metafor::models {

// Theta method: SES on the seasonally adjusted series plus a drift of half
// the OLS slope, reseasonalized. Requires len >= 4.
std::vector<double> theta_forecast(const std::vector<double>& train, int period, int horizon);

// Equal-weight combination of SES, Holt and damped Holt forecasts, each fit
// on the seasonally adjusted series. Requires len >= 4.
std::vector<double> comb_forecast(const std::vector<double>& train, int period, int horizon);

} // namespace metafor::models
