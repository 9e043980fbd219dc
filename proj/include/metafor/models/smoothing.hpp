#pragma once

#include <string>
#include <vector>

namespace metafor::models {

// A fitted smoothing model: optimized parameters, in-sample one-step SSE and
// the corrected information criterion used for family selection.
struct SmoothingFit {
    std::string name;
    std::vector<double> params;
    double sse = 0.0;
    std::size_t n_errors = 0;
    int k = 0; // parameter count + initial states
    double aicc = 0.0;
    std::vector<double> forecast;
};

SmoothingFit ses(const std::vector<double>& y, int horizon);
SmoothingFit holt(const std::vector<double>& y, int horizon);
SmoothingFit damped_holt(const std::vector<double>& y, int horizon);
// Additive Holt-Winters; requires len >= 2 * period.
SmoothingFit holt_winters_additive(const std::vector<double>& y, int period, int horizon);

// Best of SES / Holt / damped Holt (plus the additive seasonal member when
// the series is long enough) by AICc.
SmoothingFit ets_family(const std::vector<double>& y, int period, int horizon,
                        bool allow_seasonal = true);

} // namespace metafor::models
