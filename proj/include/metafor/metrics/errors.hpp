#pragma once

#include "metafor/core/series.hpp"

#include <vector>

namespace metafor::metrics {

// Three absolute and three relative forecasting errors. SMAPE is on the
// 0..200 scale and MAAPE on 0..100*pi/2; MASE is NaN when the in-sample
// seasonal-naive scale is zero.
struct ErrorVector {
    double rmse = 0.0;
    double mae = 0.0;
    double mdae = 0.0;
    double smape = 0.0;
    double maape = 0.0;
    double mase = 0.0;
};

// Seasonal lag used by the MASE scale: 12 for monthly data, 1 otherwise.
int mase_lag(core::Frequency f);

ErrorVector compute_errors(const std::vector<double>& actual,
                           const std::vector<double>& forecast,
                           const std::vector<double>& train,
                           int lag);

} // namespace metafor::metrics
