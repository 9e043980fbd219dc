#pragma once

#include "metafor/ensemble/pooling.hpp"
#include "metafor/metrics/errors.hpp"

#include <string>
#include <vector>

namespace metafor::metrics {

struct ModelScore {
    std::string model_id;
    ErrorVector errors;
    double runtime_ms = 0.0;
};

struct RankedModel {
    std::string model_id;
    ErrorVector errors;
    double runtime_ms = 0.0;
    double mean_rank = 0.0;
    int final_rank = 0;
};

// Fractional (average-tie) ranks of `values`, ascending; NaN ranks worst.
std::vector<double> fractional_ranks(const std::vector<double>& values);

// Averages the six per-metric rankings; ties on the average are broken by
// smaller runtime, then lexicographic model id. Output preserves input order
// and final_rank is a permutation of 1..P.
std::vector<RankedModel> rank_models(const std::vector<ModelScore>& rows);

// Evaluates cumulative pooling of the rank-ordered forecasts for k = 1..P
// and returns the k whose pooled forecast aggregates best across the six
// metrics; ties prefer the smaller k.
int optimal_ensemble_size(const std::vector<std::vector<double>>& ranked_forecasts,
                          const std::vector<double>& actual,
                          const std::vector<double>& train,
                          int lag,
                          ensemble::PoolingMode mode);

} // namespace metafor::metrics
