#include "metafor/core/tsmath.hpp"
#include "metafor/util/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace metafor::core {

double mean_of(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double variance_of(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double m = mean_of(v);
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    return ss / static_cast<double>(v.size() - 1);
}

double stddev_of(const std::vector<double>& v) { return std::sqrt(variance_of(v)); }

double median_of(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double quantile_of(std::vector<double> v, double p) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const double idx = p * static_cast<double>(v.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(idx));
    const std::size_t hi = static_cast<std::size_t>(std::ceil(idx));
    const double frac = idx - static_cast<double>(lo);
    return v[lo] + frac * (v[hi] - v[lo]);
}

double skewness_of(const std::vector<double>& v) {
    const std::size_t n = v.size();
    if (n < 3) return 0.0;
    const double m = mean_of(v);
    double m2 = 0.0, m3 = 0.0;
    for (double x : v) {
        const double d = x - m;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= static_cast<double>(n);
    m3 /= static_cast<double>(n);
    if (m2 <= 0.0) return 0.0;
    return m3 / std::pow(m2, 1.5);
}

double kurtosis_of(const std::vector<double>& v) {
    const std::size_t n = v.size();
    if (n < 4) return 0.0;
    const double m = mean_of(v);
    double m2 = 0.0, m4 = 0.0;
    for (double x : v) {
        const double d = x - m;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    m2 /= static_cast<double>(n);
    m4 /= static_cast<double>(n);
    if (m2 <= 0.0) return 0.0;
    return m4 / (m2 * m2);
}

void fft(std::vector<double>& re, std::vector<double>& im, bool inverse) {
    const std::size_t n = re.size();
    if (n < 2) return;
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) {
            std::swap(re[i], re[j]);
            std::swap(im[i], im[j]);
        }
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
        const double wr = std::cos(ang);
        const double wi = std::sin(ang);
        for (std::size_t i = 0; i < n; i += len) {
            double cur_r = 1.0, cur_i = 0.0;
            for (std::size_t k = 0; k < len / 2; ++k) {
                const double ur = re[i + k], ui = im[i + k];
                const double vr = re[i + k + len / 2] * cur_r - im[i + k + len / 2] * cur_i;
                const double vi = re[i + k + len / 2] * cur_i + im[i + k + len / 2] * cur_r;
                re[i + k] = ur + vr;
                im[i + k] = ui + vi;
                re[i + k + len / 2] = ur - vr;
                im[i + k + len / 2] = ui - vi;
                const double nr = cur_r * wr - cur_i * wi;
                cur_i = cur_r * wi + cur_i * wr;
                cur_r = nr;
            }
        }
    }
    if (inverse) {
        for (std::size_t i = 0; i < n; ++i) {
            re[i] /= static_cast<double>(n);
            im[i] /= static_cast<double>(n);
        }
    }
}

std::vector<double> acf(const std::vector<double>& values, int max_lag) {
    const std::size_t n = values.size();
    std::vector<double> r(static_cast<std::size_t>(std::max(0, max_lag)), 0.0);
    if (n < 2 || max_lag < 1) return r;
    const double m = mean_of(values);
    double c0 = 0.0;
    for (double x : values) c0 += (x - m) * (x - m);
    if (c0 <= 0.0) return r;
    const std::size_t lags = std::min(static_cast<std::size_t>(max_lag), n - 1);

    if (n * lags <= 32768) {
        for (std::size_t k = 1; k <= lags; ++k) {
            double c = 0.0;
            for (std::size_t t = k; t < n; ++t) c += (values[t] - m) * (values[t - k] - m);
            r[k - 1] = c / c0;
        }
        return r;
    }
    // FFT-based autocovariance for long series / many lags
    std::size_t size = 1;
    while (size < 2 * n) size <<= 1;
    std::vector<double> re(size, 0.0), im(size, 0.0);
    for (std::size_t t = 0; t < n; ++t) re[t] = values[t] - m;
    fft(re, im, false);
    for (std::size_t i = 0; i < size; ++i) {
        const double p = re[i] * re[i] + im[i] * im[i];
        re[i] = p;
        im[i] = 0.0;
    }
    fft(re, im, true);
    for (std::size_t k = 1; k <= lags; ++k) r[k - 1] = re[k] / re[0];
    return r;
}

std::vector<double> pacf(const std::vector<double>& values, int max_lag) {
    const std::vector<double> r = acf(values, max_lag);
    const std::size_t k = r.size();
    std::vector<double> out(k, 0.0);
    if (k == 0) return out;
    std::vector<double> phi_prev(k + 1, 0.0), phi(k + 1, 0.0);
    out[0] = r[0];
    phi_prev[1] = r[0];
    for (std::size_t lag = 2; lag <= k; ++lag) {
        double num = r[lag - 1];
        double den = 1.0;
        for (std::size_t j = 1; j < lag; ++j) {
            num -= phi_prev[j] * r[lag - 1 - j];
            den -= phi_prev[j] * r[j - 1];
        }
        const double pk = std::fabs(den) < 1e-12 ? 0.0 : num / den;
        out[lag - 1] = pk;
        for (std::size_t j = 1; j < lag; ++j) phi[j] = phi_prev[j] - pk * phi_prev[lag - j];
        phi[lag] = pk;
        for (std::size_t j = 1; j <= lag; ++j) phi_prev[j] = phi[j];
    }
    return out;
}

std::vector<double> periodogram(const std::vector<double>& values) {
    const std::size_t n = values.size();
    if (n < 4) return {};
    const double m = mean_of(values);
    std::size_t size = 1;
    while (size < n) size <<= 1;
    std::vector<double> re(size, 0.0), im(size, 0.0);
    for (std::size_t t = 0; t < n; ++t) re[t] = values[t] - m;
    fft(re, im, false);
    std::vector<double> power(size / 2);
    for (std::size_t i = 1; i <= size / 2; ++i) {
        power[i - 1] = (re[i] * re[i] + im[i] * im[i]) / static_cast<double>(n);
    }
    return power;
}

int default_lag_truncation(std::size_t n) {
    return static_cast<int>(std::floor(4.0 * std::pow(static_cast<double>(n) / 100.0, 0.25)));
}

namespace {

// Bartlett-weighted long-run variance of residuals.
double long_run_variance(const std::vector<double>& e, int l) {
    const std::size_t n = e.size();
    double g0 = 0.0;
    for (double x : e) g0 += x * x;
    g0 /= static_cast<double>(n);
    double lrv = g0;
    for (int j = 1; j <= l; ++j) {
        double gj = 0.0;
        for (std::size_t t = static_cast<std::size_t>(j); t < n; ++t) gj += e[t] * e[t - static_cast<std::size_t>(j)];
        gj /= static_cast<double>(n);
        lrv += 2.0 * (1.0 - static_cast<double>(j) / (l + 1.0)) * gj;
    }
    return lrv;
}

} // namespace

double kpss_statistic(const std::vector<double>& values, bool trend) {
    const std::size_t n = values.size();
    if (n < 10) return 0.0;
    std::vector<double> resid(n);
    if (!trend) {
        const double m = mean_of(values);
        for (std::size_t t = 0; t < n; ++t) resid[t] = values[t] - m;
    } else {
        std::vector<std::vector<double>> cols(2, std::vector<double>(n));
        for (std::size_t t = 0; t < n; ++t) {
            cols[0][t] = 1.0;
            cols[1][t] = static_cast<double>(t);
        }
        std::vector<double> beta;
        if (!util::ols(cols, values, beta)) return 0.0;
        for (std::size_t t = 0; t < n; ++t) resid[t] = values[t] - beta[0] - beta[1] * static_cast<double>(t);
    }
    double cum = 0.0, num = 0.0;
    for (double e : resid) {
        cum += e;
        num += cum * cum;
    }
    num /= static_cast<double>(n) * static_cast<double>(n);
    const double lrv = long_run_variance(resid, default_lag_truncation(n));
    return lrv <= 0.0 ? 0.0 : num / lrv;
}

double adf_statistic(const std::vector<double>& values) {
    const std::size_t n = values.size();
    if (n < 10) return 0.0;
    const int k = std::min(default_lag_truncation(n), static_cast<int>(n) / 4);
    const std::size_t start = static_cast<std::size_t>(k) + 1;
    const std::size_t rows = n - start;
    if (rows < static_cast<std::size_t>(k) + 4) return 0.0;

    std::vector<double> dy(n - 1);
    for (std::size_t t = 1; t < n; ++t) dy[t - 1] = values[t] - values[t - 1];

    const std::size_t ncols = 2 + static_cast<std::size_t>(k);
    std::vector<std::vector<double>> cols(ncols, std::vector<double>(rows));
    std::vector<double> y(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::size_t t = start + i; // index into values for dy_t = values[t]-values[t-1]
        y[i] = dy[t - 1];
        cols[0][i] = 1.0;
        cols[1][i] = values[t - 1];
        for (int j = 1; j <= k; ++j) cols[1 + static_cast<std::size_t>(j)][i] = dy[t - 1 - static_cast<std::size_t>(j)];
    }
    std::vector<double> beta;
    if (!util::ols(cols, y, beta)) return 0.0;
    double sse = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        double pred = 0.0;
        for (std::size_t c = 0; c < ncols; ++c) pred += beta[c] * cols[c][i];
        sse += (y[i] - pred) * (y[i] - pred);
    }
    const double s2 = sse / static_cast<double>(rows - ncols);

    // standard error of the level coefficient via (X'X)^-1 column solve
    std::vector<std::vector<double>> xtx(ncols, std::vector<double>(ncols, 0.0));
    for (std::size_t a = 0; a < ncols; ++a) {
        for (std::size_t b = a; b < ncols; ++b) {
            double s = 0.0;
            for (std::size_t i = 0; i < rows; ++i) s += cols[a][i] * cols[b][i];
            xtx[a][b] = xtx[b][a] = s;
        }
    }
    std::vector<double> unit(ncols, 0.0), z;
    unit[1] = 1.0;
    if (!util::solve_linear(xtx, unit, z) || z[1] <= 0.0) return 0.0;
    const double se = std::sqrt(s2 * z[1]);
    return se == 0.0 ? 0.0 : beta[1] / se;
}

double pp_statistic(const std::vector<double>& values) {
    const std::size_t n = values.size();
    if (n < 10) return 0.0;
    const std::size_t rows = n - 1;
    std::vector<std::vector<double>> cols(2, std::vector<double>(rows));
    std::vector<double> y(rows);
    for (std::size_t t = 1; t < n; ++t) {
        cols[0][t - 1] = 1.0;
        cols[1][t - 1] = values[t - 1];
        y[t - 1] = values[t];
    }
    std::vector<double> beta;
    if (!util::ols(cols, y, beta)) return 0.0;
    std::vector<double> e(rows);
    double sse = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        e[i] = y[i] - beta[0] - beta[1] * cols[1][i];
        sse += e[i] * e[i];
    }
    if (rows < 4) return 0.0;
    const double s2 = sse / static_cast<double>(rows - 2);

    double sx = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        sx += cols[1][i];
        sxx += cols[1][i] * cols[1][i];
    }
    const double denom = sxx - sx * sx / static_cast<double>(rows);
    if (denom <= 0.0) return 0.0;
    const double se_rho = std::sqrt(s2 / denom);
    const double t_stat = (beta[1] - 1.0) / se_rho;

    const double g0 = sse / static_cast<double>(rows);
    const double lrv = long_run_variance(e, default_lag_truncation(rows));
    if (lrv <= 0.0) return t_stat;
    const double s = std::sqrt(s2);
    return std::sqrt(g0 / lrv) * t_stat -
           0.5 * (lrv - g0) / std::sqrt(lrv) * (static_cast<double>(rows) * se_rho / s);
}

} // namespace metafor::core
