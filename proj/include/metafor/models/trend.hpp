#pragma once

#include <vector>

namespace metafor::models {

// Polynomial trend regressions with optional seasonal dummies, fit by least
// squares and extrapolated over the horizon.
std::vector<double> linear_trend_forecast(const std::vector<double>& train, int horizon);
std::vector<double> quadratic_trend_forecast(const std::vector<double>& train, int horizon);
std::vector<double> linear_trend_seasonal_forecast(const std::vector<double>& train, int period, int horizon);
std::vector<double> quadratic_trend_seasonal_forecast(const std::vector<double>& train, int period, int horizon);

} // namespace metafor::models
