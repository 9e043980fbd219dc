#pragma once

#include <vector>

namespace metafor::features {

// Decomposition-based features. Seasonal outputs are NaN when the series is
// shorter than two periods.
struct StlFeatures {
    double trend_strength = 0.0;
    double seasonal_strength = 0.0;
    double spike = 0.0;
    double linearity = 0.0;
    double curvature = 0.0;
    double e_acf1 = 0.0;
    double e_acf10 = 0.0;
    double peak = 0.0;
    double trough = 0.0;
};
StlFeatures stl_features(const std::vector<double>& y, int period);

struct StationarityStats {
    double adf_stat = 0.0;
    double kpss_level = 0.0;
    double kpss_trend = 0.0;
    double pp_stat = 0.0;
};
StationarityStats stationarity_stats(const std::vector<double>& y);

struct ComplexityStats {
    double hurst_rs = 0.0;
    double dfa_exponent = 0.0;
    double higuchi_fd = 0.0;
    double madogram_fd = 0.0;
    double approx_entropy = 0.0;
    double sample_entropy = 0.0;
    double spectral_entropy = 0.0;
};
ComplexityStats complexity_stats(const std::vector<double>& y);

struct AnomalyStats {
    double tukey_mad_fraction = 0.0;
    double iqr_fraction = 0.0;
    double iqr_fraction_pos = 0.0;
    double iqr_fraction_neg = 0.0;
    double last_anomaly_pos_rel = 0.0; // NaN when no anomaly of that sign
    double last_anomaly_neg_rel = 0.0;
};
AnomalyStats anomaly_stats(const std::vector<double>& y, int period);

struct ShapeStats {
    double skewness = 0.0;
    double kurtosis = 0.0;
    double crossing_points_fraction = 0.0;
    double flat_spots_fraction = 0.0;
    double longest_flat_run = 0.0;
    double lumpiness = 0.0;
    double stability = 0.0;
    double nonlinearity = 0.0;
    double arch_lm = 0.0;
};
ShapeStats shape_stats(const std::vector<double>& y, int period);

double jarque_bera_stat(const std::vector<double>& y);
double anderson_darling_stat(const std::vector<double>& y);

} // namespace metafor::features
