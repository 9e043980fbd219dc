#pragma once

#include <vector>

namespace metafor::models {

// Classical moving-average decomposition. Trend is NaN at the edges where
// the centered window does not fit; seasonal indices are one full period,
// phase-aligned with index 0 of the input.
struct Decomposition {
    std::vector<double> trend;
    std::vector<double> seasonal;
    std::vector<double> remainder;
    std::vector<double> indices; // length = period
    bool multiplicative = false;
};

// Requires n >= 2 * period and period >= 2.
Decomposition classical_decomposition(const std::vector<double>& values, int period, bool multiplicative);

// Centered moving average with window w (even w uses the standard 2xw form).
std::vector<double> centered_moving_average(const std::vector<double>& values, int window);

// Variance-ratio seasonal strength in [0,1]; 0 when undecomposable.
double seasonal_strength(const std::vector<double>& values, int period);

// Seasonal adjustment used by Theta, Comb and SES-style members: active only
// when the autocorrelation at the seasonal lag clears a 90% significance
// band. Multiplicative indices by default, additive when values are not
// strictly positive.
struct SeasonalAdjustment {
    bool active = false;
    bool multiplicative = true;
    int period = 1;
    std::size_t train_len = 0;
    std::vector<double> indices;  // empty when inactive
    std::vector<double> adjusted; // == input when inactive

    // Maps a forecast of the adjusted series back to the original scale.
    std::vector<double> reseasonalize(const std::vector<double>& forecast) const;
};

SeasonalAdjustment seasonal_adjustment(const std::vector<double>& train, int period);

} // namespace metafor::models
