#include "metafor/ensemble/pooling.hpp"

#include <string>

namespace metafor::ensemble {

const char* pooling_mode_name(PoolingMode m) {
    return m == PoolingMode::Simple ? "simple" : "weighted";
}

PoolingMode pooling_mode_from_name(const std::string& name) {
    if (name == "simple") return PoolingMode::Simple;
    if (name == "weighted") return PoolingMode::Weighted;
    throw util::UsageError("unknown pooling mode: " + name);
}

std::vector<double> reciprocal_rank_weights(int k) {
    if (k < 1) throw util::UsageError("ensemble size must be >= 1");
    double norm = 0.0;
    for (int j = 1; j <= k; ++j) norm += 1.0 / j;
    std::vector<double> w(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) w[static_cast<std::size_t>(i - 1)] = (1.0 / i) / norm;
    return w;
}

std::vector<double> equal_weights(int k) {
    if (k < 1) throw util::UsageError("ensemble size must be >= 1");
    return std::vector<double>(static_cast<std::size_t>(k), 1.0 / k);
}

std::vector<double> pool_forecasts(const std::vector<std::vector<double>>& forecasts,
                                   const std::vector<double>& weights) {
    if (forecasts.size() != weights.size() || forecasts.empty()) {
        throw util::UsageError("forecast matrix and weights disagree");
    }
    const std::size_t h = forecasts.front().size();
    for (const auto& f : forecasts) {
        if (f.size() != h) throw util::UsageError("forecast rows have mismatched lengths");
    }
    // centered form: exact when members agree (and for k = 1), since the
    // weight-sum rounding never multiplies the base forecast
    std::vector<double> pooled = forecasts.front();
    for (std::size_t t = 0; t < h; ++t) {
        double corr = 0.0;
        for (std::size_t i = 1; i < forecasts.size(); ++i) {
            corr += weights[i] * (forecasts[i][t] - forecasts.front()[t]);
        }
        pooled[t] += corr;
    }
    return pooled;
}

} // namespace metafor::ensemble
