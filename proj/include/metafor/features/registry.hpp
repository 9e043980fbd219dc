#pragma once

#include "metafor/core/series.hpp"

#include <string>
#include <vector>

namespace metafor::features {

// Feature vectors are stored as plain arrays aligned with the registry's
// column catalog; the catalog is fixed per registry version and identical
// across all segments.
class FeatureRegistry {
public:
    static const FeatureRegistry& instance();

    // Base feature names, one entry per feature applied to every variant.
    const std::vector<std::string>& base_names() const { return base_names_; }
    // Full catalog: "<variant>.<feature>" for orig, diff, log.
    const std::vector<std::string>& column_names() const { return column_names_; }

    std::size_t index_of(const std::string& column) const; // throws on miss

    // Evaluates every registered feature on the orig/diff/log variants.
    // Requires len >= 8. NaN marks documented degenerate conditions.
    std::vector<double> compute(const core::TimeSeries& train) const;

private:
    FeatureRegistry();
    std::vector<std::string> base_names_;
    std::vector<std::string> column_names_;
};

// Convenience wrapper matching the registry's column order.
std::vector<double> compute_features(const core::TimeSeries& train);

} // namespace metafor::features
