#pragma once

#include "metafor/util/errors.hpp"

#include <cstddef>
#include <vector>

namespace metafor::ensemble {

enum class PoolingMode { Simple, Weighted };

const char* pooling_mode_name(PoolingMode m);
PoolingMode pooling_mode_from_name(const std::string& name);

// w_i = (1/i) / sum_{j=1..k} 1/j for i = 1..k.
std::vector<double> reciprocal_rank_weights(int k);

std::vector<double> equal_weights(int k);

// Elementwise weighted sum of k forecasts of equal length.
std::vector<double> pool_forecasts(const std::vector<std::vector<double>>& forecasts,
                                   const std::vector<double>& weights);

} // namespace metafor::ensemble
