#pragma once

#include "metafor/core/series.hpp"

#include <string>
#include <vector>

namespace metafor::models {

// Capability flags follow the pool table semantics: `seasonal` models exploit
// the seasonal period, `complex_model` marks everything below the simple
// baseline block, `decomposition` marks the decomposition hybrids.
struct ForecasterSpec {
    std::string model_id;
    bool seasonal = false;
    bool complex_model = false;
    bool decomposition = false;
};

enum class ForecastStatus { Ok, Fallback };

struct ForecastOutput {
    std::string model_id;
    std::vector<double> point_forecast;
    double runtime_ms = 0.0;
    ForecastStatus status = ForecastStatus::Ok;
};

// The fixed 16-member pool, in catalog order.
const std::vector<ForecasterSpec>& pool_catalog();

// Throws util::UsageError for unknown ids.
const ForecasterSpec& catalog_spec(const std::string& model_id);

// Documented minimum training length per member; anything shorter triggers
// the naive fallback rather than an error.
std::size_t min_train_length(const std::string& model_id, int period);

// Total fit-and-forecast contract: h finite values or a flagged naive
// fallback, never an exception for a known model id.
ForecastOutput fit_and_forecast(const std::string& model_id, const core::TimeSeries& train, int horizon);

std::vector<double> naive_forecast(const std::vector<double>& train, int horizon);
std::vector<double> snaive_forecast(const std::vector<double>& train, int period, int horizon);
std::vector<double> drift_forecast(const std::vector<double>& train, int horizon);

enum class StlInner { Arima, Ets, Theta };

// Additive decomposition, inner forecast on the seasonally adjusted series,
// last seasonal cycle re-added. Delegates to the inner model when the series
// is too short to decompose.
std::vector<double> stl_hybrid_forecast(const std::vector<double>& train, int period, int horizon,
                                        StlInner inner);

} // namespace metafor::models
