#pragma once

#include "metafor/core/series.hpp"
#include "metafor/models/pool.hpp"

#include <string>
#include <vector>

namespace metafor::features {

// Meta-information columns appended to the feature block: the forecasting
// horizon and a one-hot data-type encoding; ranker rows additionally carry a
// model one-hot plus the three capability flags.
std::vector<std::string> meta_column_names();
std::vector<double> meta_column_values(int horizon, core::Frequency frequency);

std::vector<std::string> model_column_names();
std::vector<double> model_column_values(const models::ForecasterSpec& spec);

} // namespace metafor::features
