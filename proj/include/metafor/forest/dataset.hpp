#pragma once

#include "metafor/core/expand.hpp"
#include "metafor/metrics/ranking.hpp"

#include <map>
#include <string>
#include <vector>

namespace metafor::forest {

// Column-major training table. finalize() learns per-column medians on the
// rows and imputes NaN in place, so trees never see missing values; the
// medians travel with any forest fit on the dataset.
struct MetaDataset {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> data; // [column][row]
    std::vector<double> targets;
    std::vector<std::size_t> always_split; // column indices
    std::vector<double> imputation;        // per-column training median
    std::vector<bool> binary;              // 0/1 columns get a cheaper split scan

    std::size_t n_rows() const { return targets.size(); }
    std::size_t n_cols() const { return columns.size(); }
    void finalize();
};

// One row per (segment, pool member): feature block + meta columns + model
// one-hot and capability flags; target is the model's aggregated rank.
MetaDataset assemble_a1(const std::vector<core::SegmentMeta>& segments,
                        const std::map<std::string, std::vector<double>>& features,
                        const std::map<std::string, std::vector<metrics::RankedModel>>& rank_tables);

// One row per segment; target is the recommended ensemble size.
MetaDataset assemble_a2(const std::vector<core::SegmentMeta>& segments,
                        const std::map<std::string, std::vector<double>>& features,
                        const std::map<std::string, int>& k_targets);

// Serving-side row builders aligned with the assembled column order.
std::vector<double> build_a1_row(const std::vector<double>& features, int horizon,
                                 core::Frequency frequency, const std::string& model_id);
std::vector<double> build_a2_row(const std::vector<double>& features, int horizon,
                                 core::Frequency frequency);

std::vector<std::string> a1_columns();
std::vector<std::string> a2_columns();

} // namespace metafor::forest
