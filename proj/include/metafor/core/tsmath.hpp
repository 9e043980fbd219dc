#pragma once

#include <cstddef>
#include <vector>

namespace metafor::core {

double mean_of(const std::vector<double>& v);
double variance_of(const std::vector<double>& v); // sample variance, n-1
double stddev_of(const std::vector<double>& v);
double median_of(std::vector<double> v);
// Type-7 quantile (linear interpolation), p in [0,1].
double quantile_of(std::vector<double> v, double p);
double skewness_of(const std::vector<double>& v);
double kurtosis_of(const std::vector<double>& v); // non-excess

// In-place radix-2 FFT; re/im are zero-padded to a power of two by caller.
void fft(std::vector<double>& re, std::vector<double>& im, bool inverse);

// Sample autocorrelations r_1..r_max_lag (mean-centered, lag-0 denominator).
// Zero-variance input returns all zeros.
std::vector<double> acf(const std::vector<double>& values, int max_lag);

// Partial autocorrelations via Durbin-Levinson from the ACF.
std::vector<double> pacf(const std::vector<double>& values, int max_lag);

// Raw periodogram power at the n/2 positive Fourier frequencies of the
// mean-removed series (rectangular window).
std::vector<double> periodogram(const std::vector<double>& values);

// Bartlett-window truncation lag floor(4 * (n/100)^0.25).
int default_lag_truncation(std::size_t n);

// Unit-root and stationarity statistics (statistics, not p-values).
double kpss_statistic(const std::vector<double>& values, bool trend);
double adf_statistic(const std::vector<double>& values);
double pp_statistic(const std::vector<double>& values);

} // namespace metafor::core
