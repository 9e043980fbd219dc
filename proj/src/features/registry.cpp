#include "metafor/features/registry.hpp"
#include "metafor/core/tsmath.hpp"
#include "metafor/features/catch22.hpp"
#include "metafor/features/groups.hpp"
#include "metafor/util/errors.hpp"

#include <cmath>
#include <limits>
#include <unordered_map>

namespace metafor::features {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::vector<std::string> kBaseNames = {
    // distribution / correlation / symbolic set
    "histogram_mode_5", "histogram_mode_10", "acf_first_e_crossing", "acf_first_min",
    "ami_even_2_5", "time_reversal_cubed", "pnn40", "stretch_above_mean",
    "transition_matrix_sumdiagcov", "periodicity_wang", "embed2_expfit_meandiff", "ami_first_min",
    "local_mean_tau_ratio", "outlier_timing_pos", "outlier_timing_neg", "spectral_area_low5",
    "stretch_decreasing", "motif3_pair_entropy", "fluct_rs_regime_prop", "fluct_dfa_regime_prop",
    "spectral_centroid", "local_mean3_stderr",
    // autocorrelation block
    "acf1", "acf10_ss", "acf_seasonal", "pacf10_ss", "pacf_seasonal",
    // decomposition block
    "trend_strength", "seasonal_strength", "spike", "linearity", "curvature", "e_acf1", "e_acf10",
    "seasonal_peak", "seasonal_trough",
    // stationarity block
    "adf_stat", "kpss_level", "kpss_trend", "pp_stat",
    // complexity block
    "hurst_rs", "dfa_exponent", "higuchi_fd", "madogram_fd", "approx_entropy", "sample_entropy",
    "spectral_entropy",
    // anomaly block
    "tukey_mad_fraction", "iqr_fraction", "iqr_fraction_pos", "iqr_fraction_neg",
    "last_anomaly_pos_rel", "last_anomaly_neg_rel",
    // shape block
    "skewness", "kurtosis", "crossing_points_fraction", "flat_spots_fraction", "longest_flat_run",
    "lumpiness", "stability", "nonlinearity", "arch_lm",
    // normality block
    "jarque_bera", "anderson_darling",
    // degenerate marker
    "is_constant",
};

// Documented degenerate values for a constant variant: every feature is 0
// except the marker and the flat-spot pair.
std::vector<double> constant_variant_values(std::size_t n) {
    std::vector<double> v(kBaseNames.size(), 0.0);
    for (std::size_t i = 0; i < kBaseNames.size(); ++i) {
        if (kBaseNames[i] == "longest_flat_run") v[i] = static_cast<double>(n);
        if (kBaseNames[i] == "flat_spots_fraction") v[i] = 1.0;
        if (kBaseNames[i] == "is_constant") v[i] = 1.0;
    }
    return v;
}

std::vector<double> compute_variant(const std::vector<double>& y, int period) {
    SeriesContext ctx = make_context(y);
    if (ctx.constant) return constant_variant_values(y.size());

    std::vector<double> out;
    out.reserve(kBaseNames.size());

    out.push_back(histogram_mode(ctx, 5));
    out.push_back(histogram_mode(ctx, 10));
    out.push_back(first_e_crossing_acf(ctx));
    out.push_back(first_min_acf(ctx));
    out.push_back(histogram_ami_even_2_5(ctx));
    out.push_back(trev_1_num(ctx));
    out.push_back(pnn40(ctx));
    out.push_back(longest_stretch_above_mean(ctx));
    out.push_back(transition_matrix_3ac_sumdiagcov(ctx));
    out.push_back(periodicity_wang(ctx));
    out.push_back(embed2_dist_expfit_meandiff(ctx));
    out.push_back(ami_first_min_40(ctx));
    out.push_back(local_mean_tauresrat(ctx));
    out.push_back(outlier_include_mdrmd(ctx, true));
    out.push_back(outlier_include_mdrmd(ctx, false));
    out.push_back(spectral_area_low_fifth(ctx));
    out.push_back(longest_stretch_decreasing(ctx));
    out.push_back(motif_three_quantile_hh(ctx));
    out.push_back(fluct_anal_prop_r1(ctx, false));
    out.push_back(fluct_anal_prop_r1(ctx, true));
    out.push_back(spectral_centroid(ctx));
    out.push_back(local_mean3_stderr(ctx));

    const std::size_t n = y.size();
    const auto r10 = core::acf(y, 10);
    out.push_back(r10.empty() ? kNaN : r10[0]);
    double acf_ss = 0.0;
    for (double r : r10) acf_ss += r * r;
    out.push_back(r10.size() < 10 ? kNaN : acf_ss);
    if (n > 2 * static_cast<std::size_t>(period)) {
        out.push_back(ctx.full_acf.size() >= static_cast<std::size_t>(period)
                          ? ctx.full_acf[static_cast<std::size_t>(period) - 1]
                          : kNaN);
    } else {
        out.push_back(kNaN);
    }
    const auto p10 = core::pacf(y, 10);
    double pacf_ss = 0.0;
    for (double p : p10) pacf_ss += p * p;
    out.push_back(p10.size() < 10 ? kNaN : pacf_ss);
    if (n > 2 * static_cast<std::size_t>(period)) {
        const auto pseas = core::pacf(y, period);
        out.push_back(pseas.size() == static_cast<std::size_t>(period) ? pseas.back() : kNaN);
    } else {
        out.push_back(kNaN);
    }

    const StlFeatures stl = stl_features(y, period);
    out.push_back(stl.trend_strength);
    out.push_back(stl.seasonal_strength);
    out.push_back(stl.spike);
    out.push_back(stl.linearity);
    out.push_back(stl.curvature);
    out.push_back(stl.e_acf1);
    out.push_back(stl.e_acf10);
    out.push_back(stl.peak);
    out.push_back(stl.trough);

    if (n >= 10) {
        const StationarityStats st = stationarity_stats(y);
        out.push_back(st.adf_stat);
        out.push_back(st.kpss_level);
        out.push_back(st.kpss_trend);
        out.push_back(st.pp_stat);
    } else {
        for (int i = 0; i < 4; ++i) out.push_back(kNaN);
    }

    if (n >= 16) {
        const ComplexityStats cx = complexity_stats(y);
        out.push_back(cx.hurst_rs);
        out.push_back(cx.dfa_exponent);
        out.push_back(cx.higuchi_fd);
        out.push_back(cx.madogram_fd);
        out.push_back(cx.approx_entropy);
        out.push_back(cx.sample_entropy);
        out.push_back(cx.spectral_entropy);
    } else {
        for (int i = 0; i < 7; ++i) out.push_back(kNaN);
    }

    const AnomalyStats an = anomaly_stats(y, period);
    out.push_back(an.tukey_mad_fraction);
    out.push_back(an.iqr_fraction);
    out.push_back(an.iqr_fraction_pos);
    out.push_back(an.iqr_fraction_neg);
    out.push_back(an.last_anomaly_pos_rel);
    out.push_back(an.last_anomaly_neg_rel);

    const ShapeStats sh = shape_stats(y, period);
    out.push_back(sh.skewness);
    out.push_back(sh.kurtosis);
    out.push_back(sh.crossing_points_fraction);
    out.push_back(sh.flat_spots_fraction);
    out.push_back(sh.longest_flat_run);
    out.push_back(sh.lumpiness);
    out.push_back(sh.stability);
    out.push_back(sh.nonlinearity);
    out.push_back(sh.arch_lm);

    out.push_back(jarque_bera_stat(y));
    out.push_back(anderson_darling_stat(y));

    out.push_back(0.0); // is_constant
    return out;
}

} // namespace

FeatureRegistry::FeatureRegistry() {
    base_names_ = kBaseNames;
    for (const char* variant : {"orig", "diff", "log"}) {
        for (const auto& name : base_names_) {
            column_names_.push_back(std::string(variant) + "." + name);
        }
    }
}

const FeatureRegistry& FeatureRegistry::instance() {
    static const FeatureRegistry registry;
    return registry;
}

std::size_t FeatureRegistry::index_of(const std::string& column) const {
    static const std::unordered_map<std::string, std::size_t> lookup = [] {
        std::unordered_map<std::string, std::size_t> m;
        const auto& cols = instance().column_names();
        for (std::size_t i = 0; i < cols.size(); ++i) m[cols[i]] = i;
        return m;
    }();
    auto it = lookup.find(column);
    if (it == lookup.end()) throw util::UsageError("unknown feature column: " + column);
    return it->second;
}

std::vector<double> FeatureRegistry::compute(const core::TimeSeries& train) const {
    if (train.size() < 8) {
        throw util::DataError("feature extraction needs at least 8 observations: " + train.id);
    }
    const int period = train.period();
    std::vector<double> out;
    out.reserve(column_names_.size());

    const auto orig = compute_variant(train.values, period);
    out.insert(out.end(), orig.begin(), orig.end());

    const auto diff = compute_variant(core::first_difference(train).values, period);
    out.insert(out.end(), diff.begin(), diff.end());

    const auto logv = compute_variant(core::log_transform(train).values, period);
    out.insert(out.end(), logv.begin(), logv.end());
    return out;
}

std::vector<double> compute_features(const core::TimeSeries& train) {
    return FeatureRegistry::instance().compute(train);
}

} // namespace metafor::features
