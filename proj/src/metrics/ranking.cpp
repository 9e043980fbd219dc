#include "metafor/metrics/ranking.hpp"
#include "metafor/util/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace metafor::metrics {

std::vector<double> fractional_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto key = [&](std::size_t i) {
        // NaN sorts after every finite value
        return std::isnan(values[i]) ? std::numeric_limits<double>::infinity() : values[i];
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && key(order[j + 1]) == key(order[i])) ++j;
        const double shared = 0.5 * static_cast<double>(i + j) + 1.0; // mean of positions i..j, 1-based
        for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = shared;
        i = j + 1;
    }
    return ranks;
}

namespace {

std::vector<double> mean_metric_ranks(const std::vector<ErrorVector>& errors) {
    const std::size_t n = errors.size();
    auto column = [&](double ErrorVector::* field) {
        std::vector<double> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = errors[i].*field;
        return fractional_ranks(col);
    };
    const std::vector<std::vector<double>> per_metric = {
        column(&ErrorVector::rmse),  column(&ErrorVector::mae),   column(&ErrorVector::mdae),
        column(&ErrorVector::smape), column(&ErrorVector::maape), column(&ErrorVector::mase),
    };
    std::vector<double> mean(n, 0.0);
    for (const auto& ranks : per_metric) {
        for (std::size_t i = 0; i < n; ++i) mean[i] += ranks[i];
    }
    for (auto& v : mean) v /= static_cast<double>(per_metric.size());
    return mean;
}

} // namespace

std::vector<RankedModel> rank_models(const std::vector<ModelScore>& rows) {
    if (rows.size() < 2) throw util::DataError("rank_models needs at least 2 models");
    const std::size_t n = rows.size();
    std::vector<ErrorVector> errors(n);
    for (std::size_t i = 0; i < n; ++i) errors[i] = rows[i].errors;
    const std::vector<double> mean = mean_metric_ranks(errors);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (mean[a] != mean[b]) return mean[a] < mean[b];
        if (rows[a].runtime_ms != rows[b].runtime_ms) return rows[a].runtime_ms < rows[b].runtime_ms;
        return rows[a].model_id < rows[b].model_id;
    });

    std::vector<RankedModel> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t idx = order[i];
        out[idx] = RankedModel{rows[idx].model_id, rows[idx].errors, rows[idx].runtime_ms, mean[idx],
                               static_cast<int>(i + 1)};
    }
    return out;
}

int optimal_ensemble_size(const std::vector<std::vector<double>>& ranked_forecasts,
                          const std::vector<double>& actual,
                          const std::vector<double>& train,
                          int lag,
                          ensemble::PoolingMode mode) {
    if (ranked_forecasts.empty()) throw util::DataError("need at least one forecast");
    const int pool_size = static_cast<int>(ranked_forecasts.size());

    std::vector<ErrorVector> errors;
    errors.reserve(ranked_forecasts.size());
    for (int k = 1; k <= pool_size; ++k) {
        const auto weights = mode == ensemble::PoolingMode::Simple ? ensemble::equal_weights(k)
                                                                   : ensemble::reciprocal_rank_weights(k);
        std::vector<std::vector<double>> top(ranked_forecasts.begin(), ranked_forecasts.begin() + k);
        const auto pooled = ensemble::pool_forecasts(top, weights);
        errors.push_back(compute_errors(actual, pooled, train, lag));
    }

    const std::vector<double> mean = mean_metric_ranks(errors);
    int best_k = 1;
    double best_mean = mean[0];
    for (int k = 2; k <= pool_size; ++k) {
        if (mean[static_cast<std::size_t>(k - 1)] < best_mean) {
            best_mean = mean[static_cast<std::size_t>(k - 1)];
            best_k = k;
        }
    }
    return best_k;
}

} // namespace metafor::metrics
