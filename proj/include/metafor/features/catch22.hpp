#pragma once

#include <vector>

namespace metafor::features {

// Cached per-variant quantities shared by the feature calculators.
struct SeriesContext {
    const std::vector<double>* values = nullptr;
    double mean = 0.0;
    double sd = 0.0; // sample sd
    bool constant = false;
    std::vector<double> zscored;
    std::vector<double> full_acf; // r_1..r_(n-1), computed lazily to n-1
    std::vector<double> power;    // raw periodogram

    const std::vector<double>& data() const { return *values; }
    std::size_t n() const { return values->size(); }
};

SeriesContext make_context(const std::vector<double>& values);

// First zero crossing and first 1/e crossing of the ACF (in lags).
int first_zero_acf(const SeriesContext& ctx);
double first_e_crossing_acf(const SeriesContext& ctx);

// The 22 canonical distribution/correlation/stretch/fluctuation features.
double histogram_mode(const SeriesContext& ctx, int bins);
double first_min_acf(const SeriesContext& ctx);
double histogram_ami_even_2_5(const SeriesContext& ctx);
double trev_1_num(const SeriesContext& ctx);
double pnn40(const SeriesContext& ctx);
double longest_stretch_above_mean(const SeriesContext& ctx);
double transition_matrix_3ac_sumdiagcov(const SeriesContext& ctx);
double periodicity_wang(const SeriesContext& ctx);
double embed2_dist_expfit_meandiff(const SeriesContext& ctx);
double ami_first_min_40(const SeriesContext& ctx);
double local_mean_tauresrat(const SeriesContext& ctx);
double outlier_include_mdrmd(const SeriesContext& ctx, bool positive);
double spectral_area_low_fifth(const SeriesContext& ctx);
double longest_stretch_decreasing(const SeriesContext& ctx);
double motif_three_quantile_hh(const SeriesContext& ctx);
double fluct_anal_prop_r1(const SeriesContext& ctx, bool dfa);
double spectral_centroid(const SeriesContext& ctx);
double local_mean3_stderr(const SeriesContext& ctx);

} // namespace metafor::features
