#include "metafor/models/pool.hpp"
#include "metafor/models/arima.hpp"
#include "metafor/models/decompose.hpp"
#include "metafor/models/smoothing.hpp"
#include "metafor/models/theta.hpp"
#include "metafor/models/trend.hpp"
#include "metafor/models/tsb.hpp"
#include "metafor/util/errors.hpp"

#include <chrono>
#include <cmath>

namespace metafor::models {

const std::vector<ForecasterSpec>& pool_catalog() {
    static const std::vector<ForecasterSpec> catalog = {
        {"SNaive", true, false, false},
        {"Naive", false, false, false},
        {"Drift", false, false, false},
        {"LinTrend", false, false, false},
        {"LinTrendSeason", true, false, false},
        {"QuadTrend", false, false, false},
        {"QuadTrendSeason", true, false, false},
        {"TSB", false, true, false},
        {"ARIMA", false, true, false},
        {"SARIMA", true, true, false},
        {"ETS", true, true, false},
        {"HoltWintersAdd", true, true, false},
        {"Theta", true, true, false},
        {"STL-ARIMA", true, true, true},
        {"STL-ETS", true, true, true},
        {"STL-Theta", true, true, true},
    };
    return catalog;
}

const ForecasterSpec& catalog_spec(const std::string& model_id) {
    for (const auto& spec : pool_catalog()) {
        if (spec.model_id == model_id) return spec;
    }
    throw util::UsageError("unknown model id: " + model_id);
}

std::size_t min_train_length(const std::string& model_id, int period) {
    const std::size_t m = static_cast<std::size_t>(period);
    if (model_id == "Naive") return 1;
    if (model_id == "SNaive") return m;
    if (model_id == "Drift") return 2;
    if (model_id == "LinTrend") return 4;
    if (model_id == "QuadTrend") return 5;
    if (model_id == "LinTrendSeason") return m + 3;
    if (model_id == "QuadTrendSeason") return m + 4;
    if (model_id == "TSB") return 4;
    if (model_id == "ARIMA" || model_id == "SARIMA") return 10;
    if (model_id == "ETS") return 8;
    if (model_id == "HoltWintersAdd") return 2 * m;
    if (model_id == "Theta") return 4;
    if (model_id == "STL-ARIMA") return 10;
    if (model_id == "STL-ETS") return 8;
    if (model_id == "STL-Theta") return 4;
    throw util::UsageError("unknown model id: " + model_id);
}

std::vector<double> naive_forecast(const std::vector<double>& train, int horizon) {
    if (train.empty()) throw util::DataError("naive needs at least 1 observation");
    return std::vector<double>(static_cast<std::size_t>(horizon), train.back());
}

std::vector<double> snaive_forecast(const std::vector<double>& train, int period, int horizon) {
    const std::size_t m = static_cast<std::size_t>(period);
    if (train.size() < m) throw util::DataError("snaive needs a full period");
    std::vector<double> out(static_cast<std::size_t>(horizon));
    for (int k = 1; k <= horizon; ++k) {
        // last observed value at the same seasonal position
        const std::size_t back = ((static_cast<std::size_t>(k) - 1) % m) + 1;
        out[static_cast<std::size_t>(k - 1)] = train[train.size() - m + back - 1];
    }
    return out;
}

std::vector<double> drift_forecast(const std::vector<double>& train, int horizon) {
    if (train.size() < 2) throw util::DataError("drift needs at least 2 observations");
    const double slope =
        (train.back() - train.front()) / static_cast<double>(train.size() - 1);
    std::vector<double> out(static_cast<std::size_t>(horizon));
    for (int k = 1; k <= horizon; ++k) out[static_cast<std::size_t>(k - 1)] = train.back() + slope * k;
    return out;
}

std::vector<double> stl_hybrid_forecast(const std::vector<double>& train, int period, int horizon,
                                        StlInner inner) {
    auto run_inner = [&](const std::vector<double>& y) {
        switch (inner) {
        case StlInner::Arima: return auto_arima(y, period, false, horizon).forecast;
        case StlInner::Ets: return ets_family(y, period, horizon, false).forecast;
        case StlInner::Theta: return theta_forecast(y, period, horizon);
        }
        throw util::UsageError("unknown inner model");
    };
    if (period < 2 || train.size() < 2 * static_cast<std::size_t>(period)) {
        return run_inner(train);
    }
    Decomposition d = classical_decomposition(train, period, false);
    std::vector<double> adjusted(train.size());
    for (std::size_t t = 0; t < train.size(); ++t) adjusted[t] = train[t] - d.seasonal[t];
    std::vector<double> f = run_inner(adjusted);
    for (int k = 1; k <= horizon; ++k) {
        const std::size_t pos = (train.size() + static_cast<std::size_t>(k - 1)) %
                                static_cast<std::size_t>(period);
        f[static_cast<std::size_t>(k - 1)] += d.indices[pos];
    }
    return f;
}

namespace {

std::vector<double> dispatch(const std::string& id, const std::vector<double>& y, int period,
                             int horizon) {
    if (id == "SNaive") return snaive_forecast(y, period, horizon);
    if (id == "Naive") return naive_forecast(y, horizon);
    if (id == "Drift") return drift_forecast(y, horizon);
    if (id == "LinTrend") return linear_trend_forecast(y, horizon);
    if (id == "LinTrendSeason") return linear_trend_seasonal_forecast(y, period, horizon);
    if (id == "QuadTrend") return quadratic_trend_forecast(y, horizon);
    if (id == "QuadTrendSeason") return quadratic_trend_seasonal_forecast(y, period, horizon);
    if (id == "TSB") return tsb_forecast(y, horizon);
    if (id == "ARIMA") return auto_arima(y, period, false, horizon).forecast;
    if (id == "SARIMA") return auto_arima(y, period, true, horizon).forecast;
    if (id == "ETS") return ets_family(y, period, horizon, true).forecast;
    if (id == "HoltWintersAdd") return holt_winters_additive(y, period, horizon).forecast;
    if (id == "Theta") return theta_forecast(y, period, horizon);
    if (id == "STL-ARIMA") return stl_hybrid_forecast(y, period, horizon, StlInner::Arima);
    if (id == "STL-ETS") return stl_hybrid_forecast(y, period, horizon, StlInner::Ets);
    if (id == "STL-Theta") return stl_hybrid_forecast(y, period, horizon, StlInner::Theta);
    throw util::UsageError("unknown model id: " + id);
}

bool all_finite(const std::vector<double>& v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

} // namespace

ForecastOutput fit_and_forecast(const std::string& model_id, const core::TimeSeries& train,
                                int horizon) {
    catalog_spec(model_id); // unknown ids are a catalog error, not a fallback
    if (horizon < 1) throw util::UsageError("horizon must be positive");

    const auto t0 = std::chrono::steady_clock::now();
    ForecastOutput out;
    out.model_id = model_id;
    out.status = ForecastStatus::Ok;
    try {
        if (train.size() < min_train_length(model_id, train.period())) {
            throw util::DataError("below minimum training length");
        }
        out.point_forecast = dispatch(model_id, train.values, train.period(), horizon);
        if (out.point_forecast.size() != static_cast<std::size_t>(horizon) ||
            !all_finite(out.point_forecast)) {
            throw util::DataError("non-finite forecast");
        }
    } catch (const util::UsageError&) {
        throw;
    } catch (...) {
        out.point_forecast = naive_forecast(train.values, horizon);
        out.status = ForecastStatus::Fallback;
    }
    const auto t1 = std::chrono::steady_clock::now();
    out.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return out;
}

} // namespace metafor::models
