#include "metafor/forest/dataset.hpp"
#include "metafor/core/tsmath.hpp"
#include "metafor/features/meta.hpp"
#include "metafor/features/registry.hpp"
#include "metafor/models/pool.hpp"
#include "metafor/util/errors.hpp"

#include <cmath>

namespace metafor::forest {

void MetaDataset::finalize() {
    imputation.assign(n_cols(), 0.0);
    binary.assign(n_cols(), false);
    for (std::size_t c = 0; c < n_cols(); ++c) {
        std::vector<double> present;
        present.reserve(data[c].size());
        for (double v : data[c]) {
            if (!std::isnan(v)) present.push_back(v);
        }
        imputation[c] = present.empty() ? 0.0 : core::median_of(present);
        bool is01 = true;
        for (double v : data[c]) {
            if (std::isnan(v)) {
                data[c][&v - data[c].data()] = imputation[c];
            }
        }
        for (double v : data[c]) {
            if (v != 0.0 && v != 1.0) {
                is01 = false;
                break;
            }
        }
        binary[c] = is01;
    }
}

std::vector<std::string> a1_columns() {
    std::vector<std::string> cols = features::FeatureRegistry::instance().column_names();
    for (const auto& m : features::meta_column_names()) cols.push_back(m);
    for (const auto& m : features::model_column_names()) cols.push_back(m);
    return cols;
}

std::vector<std::string> a2_columns() {
    std::vector<std::string> cols = features::FeatureRegistry::instance().column_names();
    for (const auto& m : features::meta_column_names()) cols.push_back(m);
    return cols;
}

namespace {

std::vector<std::size_t> tail_indices(std::size_t total, std::size_t tail) {
    std::vector<std::size_t> idx;
    for (std::size_t i = total - tail; i < total; ++i) idx.push_back(i);
    return idx;
}

void push_row(MetaDataset& ds, const std::vector<double>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) ds.data[c].push_back(row[c]);
}

} // namespace

std::vector<double> build_a1_row(const std::vector<double>& features_vec, int horizon,
                                 core::Frequency frequency, const std::string& model_id) {
    std::vector<double> row = features_vec;
    const auto meta = features::meta_column_values(horizon, frequency);
    row.insert(row.end(), meta.begin(), meta.end());
    const auto model = features::model_column_values(models::catalog_spec(model_id));
    row.insert(row.end(), model.begin(), model.end());
    return row;
}

std::vector<double> build_a2_row(const std::vector<double>& features_vec, int horizon,
                                 core::Frequency frequency) {
    std::vector<double> row = features_vec;
    const auto meta = features::meta_column_values(horizon, frequency);
    row.insert(row.end(), meta.begin(), meta.end());
    return row;
}

MetaDataset assemble_a1(const std::vector<core::SegmentMeta>& segments,
                        const std::map<std::string, std::vector<double>>& features,
                        const std::map<std::string, std::vector<metrics::RankedModel>>& rank_tables) {
    MetaDataset ds;
    ds.columns = a1_columns();
    ds.data.assign(ds.columns.size(), {});
    const std::size_t feature_count = features::FeatureRegistry::instance().column_names().size();
    ds.always_split = tail_indices(ds.columns.size(), ds.columns.size() - feature_count);

    for (const auto& seg : segments) {
        auto fit = features.find(seg.segment_id);
        if (fit == features.end()) throw util::DataError("missing features for segment " + seg.segment_id);
        auto rit = rank_tables.find(seg.segment_id);
        if (rit == rank_tables.end()) throw util::DataError("missing rank table for segment " + seg.segment_id);

        for (const auto& spec : models::pool_catalog()) {
            const metrics::RankedModel* row = nullptr;
            for (const auto& r : rit->second) {
                if (r.model_id == spec.model_id) {
                    row = &r;
                    break;
                }
            }
            if (!row) {
                throw util::DataError("missing rank for model " + spec.model_id + " on segment " +
                                      seg.segment_id);
            }
            push_row(ds, build_a1_row(fit->second, seg.horizon, seg.frequency, spec.model_id));
            ds.targets.push_back(static_cast<double>(row->final_rank));
        }
    }
    ds.finalize();
    return ds;
}

MetaDataset assemble_a2(const std::vector<core::SegmentMeta>& segments,
                        const std::map<std::string, std::vector<double>>& features,
                        const std::map<std::string, int>& k_targets) {
    MetaDataset ds;
    ds.columns = a2_columns();
    ds.data.assign(ds.columns.size(), {});
    const std::size_t feature_count = features::FeatureRegistry::instance().column_names().size();
    ds.always_split = tail_indices(ds.columns.size(), ds.columns.size() - feature_count);

    for (const auto& seg : segments) {
        auto fit = features.find(seg.segment_id);
        if (fit == features.end()) throw util::DataError("missing features for segment " + seg.segment_id);
        auto kit = k_targets.find(seg.segment_id);
        if (kit == k_targets.end()) throw util::DataError("missing size target for segment " + seg.segment_id);
        push_row(ds, build_a2_row(fit->second, seg.horizon, seg.frequency));
        ds.targets.push_back(static_cast<double>(kit->second));
    }
    ds.finalize();
    return ds;
}

} // namespace metafor::forest
