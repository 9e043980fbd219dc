#include "metafor/models/decompose.hpp"
#include "metafor/util/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace metafor::models {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double variance(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return ss / static_cast<double>(v.size() - 1);
}
} // namespace

std::vector<double> centered_moving_average(const std::vector<double>& values, int window) {
    const std::size_t n = values.size();
    std::vector<double> out(n, kNaN);
    if (window < 1 || static_cast<std::size_t>(window) > n) return out;
    if (window % 2 == 1) {
        const int half = window / 2;
        for (std::size_t t = static_cast<std::size_t>(half); t + static_cast<std::size_t>(half) < n; ++t) {
            double s = 0.0;
            for (int j = -half; j <= half; ++j) s += values[static_cast<std::size_t>(static_cast<long>(t) + j)];
            out[t] = s / window;
        }
    } else {
        // 2 x w moving average: average of two adjacent windows of length w
        const std::size_t w = static_cast<std::size_t>(window);
        if (n < w + 1) return out;
        for (std::size_t t = w / 2; t + w / 2 < n; ++t) {
            double s = 0.5 * values[t - w / 2] + 0.5 * values[t + w / 2];
            for (std::size_t j = t - w / 2 + 1; j < t + w / 2; ++j) s += values[j];
            out[t] = s / static_cast<double>(w);
        }
    }
    return out;
}

Decomposition classical_decomposition(const std::vector<double>& values, int period, bool multiplicative) {
    const std::size_t n = values.size();
    if (period < 2 || n < 2 * static_cast<std::size_t>(period)) {
        throw util::DataError("series too short for decomposition at this period");
    }
    Decomposition d;
    d.multiplicative = multiplicative;
    d.trend = centered_moving_average(values, period);

    // Per-position averages of the detrended series.
    std::vector<double> sums(static_cast<std::size_t>(period), 0.0);
    std::vector<int> counts(static_cast<std::size_t>(period), 0);
    for (std::size_t t = 0; t < n; ++t) {
        if (std::isnan(d.trend[t])) continue;
        double det;
        if (multiplicative) {
            if (d.trend[t] == 0.0) continue;
            det = values[t] / d.trend[t];
        } else {
            det = values[t] - d.trend[t];
        }
        sums[t % static_cast<std::size_t>(period)] += det;
        counts[t % static_cast<std::size_t>(period)] += 1;
    }
    d.indices.assign(static_cast<std::size_t>(period), multiplicative ? 1.0 : 0.0);
    double norm = 0.0;
    int have = 0;
    for (std::size_t p = 0; p < static_cast<std::size_t>(period); ++p) {
        if (counts[p] > 0) {
            d.indices[p] = sums[p] / counts[p];
            ++have;
        }
        norm += d.indices[p];
    }
    if (have > 0) {
        if (multiplicative) {
            const double mean = norm / period;
            if (mean > 0) {
                for (auto& v : d.indices) v /= mean;
            }
        } else {
            const double mean = norm / period;
            for (auto& v : d.indices) v -= mean;
        }
    }

    d.seasonal.resize(n);
    d.remainder.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
        d.seasonal[t] = d.indices[t % static_cast<std::size_t>(period)];
        if (std::isnan(d.trend[t])) {
            d.remainder[t] = kNaN;
        } else if (multiplicative) {
            const double denom = d.trend[t] * d.seasonal[t];
            d.remainder[t] = denom == 0.0 ? kNaN : values[t] / denom;
        } else {
            d.remainder[t] = values[t] - d.trend[t] - d.seasonal[t];
        }
    }
    return d;
}

double seasonal_strength(const std::vector<double>& values, int period) {
    if (period < 2 || values.size() < 2 * static_cast<std::size_t>(period)) return 0.0;
    Decomposition d = classical_decomposition(values, period, false);
    std::vector<double> rem, seas_plus_rem;
    for (std::size_t t = 0; t < values.size(); ++t) {
        if (std::isnan(d.remainder[t])) continue;
        rem.push_back(d.remainder[t]);
        seas_plus_rem.push_back(d.seasonal[t] + d.remainder[t]);
    }
    const double denom = variance(seas_plus_rem);
    if (denom <= 0.0) return 0.0;
    return std::max(0.0, 1.0 - variance(rem) / denom);
}

std::vector<double> SeasonalAdjustment::reseasonalize(const std::vector<double>& forecast) const {
    if (!active) return forecast;
    std::vector<double> out(forecast.size());
    for (std::size_t k = 0; k < forecast.size(); ++k) {
        const std::size_t pos = (train_len + k) % static_cast<std::size_t>(period);
        out[k] = multiplicative ? forecast[k] * indices[pos] : forecast[k] + indices[pos];
    }
    return out;
}

SeasonalAdjustment seasonal_adjustment(const std::vector<double>& train, int period) {
    SeasonalAdjustment adj;
    adj.period = period;
    adj.train_len = train.size();
    adj.adjusted = train;
    const std::size_t n = train.size();
    if (period < 2 || n < 3 * static_cast<std::size_t>(period)) return adj;

    // Autocorrelations up to the seasonal lag.
    double mean = 0.0;
    for (double v : train) mean += v;
    mean /= static_cast<double>(n);
    double c0 = 0.0;
    for (double v : train) c0 += (v - mean) * (v - mean);
    if (c0 <= 0.0) return adj;
    std::vector<double> r(static_cast<std::size_t>(period) + 1, 0.0);
    for (int lag = 1; lag <= period; ++lag) {
        double c = 0.0;
        for (std::size_t t = static_cast<std::size_t>(lag); t < n; ++t) {
            c += (train[t] - mean) * (train[t - static_cast<std::size_t>(lag)] - mean);
        }
        r[static_cast<std::size_t>(lag)] = c / c0;
    }
    double sumsq = 0.0;
    for (int lag = 1; lag < period; ++lag) sumsq += r[static_cast<std::size_t>(lag)] * r[static_cast<std::size_t>(lag)];
    const double band = 1.645 * std::sqrt((1.0 + 2.0 * sumsq) / static_cast<double>(n));
    if (std::fabs(r[static_cast<std::size_t>(period)]) <= band) return adj;

    adj.active = true;
    adj.multiplicative = *std::min_element(train.begin(), train.end()) > 0.0;
    Decomposition d = classical_decomposition(train, period, adj.multiplicative);
    adj.indices = d.indices;
    for (std::size_t t = 0; t < n; ++t) {
        const double idx = adj.indices[t % static_cast<std::size_t>(period)];
        adj.adjusted[t] = adj.multiplicative ? (idx != 0.0 ? train[t] / idx : train[t]) : train[t] - idx;
    }
    return adj;
}

} // namespace metafor::models
