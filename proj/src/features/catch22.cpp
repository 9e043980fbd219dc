#include "metafor/features/catch22.hpp"
#include "metafor/core/tsmath.hpp"
#include "metafor/util/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace metafor::features {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

SeriesContext make_context(const std::vector<double>& values) {
    SeriesContext ctx;
    ctx.values = &values;
    ctx.mean = core::mean_of(values);
    ctx.sd = core::stddev_of(values);
    ctx.constant = ctx.sd <= 1e-12 * (1.0 + std::fabs(ctx.mean));
    ctx.zscored.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        ctx.zscored[i] = ctx.constant ? 0.0 : (values[i] - ctx.mean) / ctx.sd;
    }
    if (values.size() >= 3 && !ctx.constant) {
        ctx.full_acf = core::acf(values, static_cast<int>(values.size()) - 1);
    }
    if (values.size() >= 4 && !ctx.constant) {
        ctx.power = core::periodogram(values);
    }
    return ctx;
}

int first_zero_acf(const SeriesContext& ctx) {
    for (std::size_t i = 0; i < ctx.full_acf.size(); ++i) {
        if (ctx.full_acf[i] < 0.0) return static_cast<int>(i + 1);
    }
    return static_cast<int>(ctx.n());
}

double first_e_crossing_acf(const SeriesContext& ctx) {
    const double thresh = 1.0 / M_E;
    double prev = 1.0;
    for (std::size_t i = 0; i < ctx.full_acf.size(); ++i) {
        const double cur = ctx.full_acf[i];
        if (cur < thresh) {
            // linear interpolation between lags i and i+1
            return static_cast<double>(i) + (prev - thresh) / (prev - cur);
        }
        prev = cur;
    }
    return static_cast<double>(ctx.n());
}

double histogram_mode(const SeriesContext& ctx, int bins) {
    const auto& z = ctx.zscored;
    if (z.empty()) return kNaN;
    const auto [lo_it, hi_it] = std::minmax_element(z.begin(), z.end());
    const double lo = *lo_it, hi = *hi_it;
    if (hi <= lo) return lo;
    const double width = (hi - lo) / bins;
    std::vector<int> counts(static_cast<std::size_t>(bins), 0);
    for (double v : z) {
        int b = static_cast<int>((v - lo) / width);
        if (b >= bins) b = bins - 1;
        counts[static_cast<std::size_t>(b)]++;
    }
    int best = 0;
    for (int b = 1; b < bins; ++b) {
        if (counts[static_cast<std::size_t>(b)] > counts[static_cast<std::size_t>(best)]) best = b;
    }
    return lo + (best + 0.5) * width;
}

double first_min_acf(const SeriesContext& ctx) {
    const auto& r = ctx.full_acf;
    if (r.size() < 2) return static_cast<double>(ctx.n());
    // lag value helper with r0 = 1 at lag zero
    auto at = [&](std::size_t lag) { return lag == 0 ? 1.0 : r[lag - 1]; };
    for (std::size_t lag = 1; lag + 1 <= r.size(); ++lag) {
        if (at(lag) < at(lag - 1) && at(lag) < at(lag + 1)) return static_cast<double>(lag);
    }
    return static_cast<double>(ctx.n());
}

double histogram_ami_even_2_5(const SeriesContext& ctx) {
    const auto& y = ctx.data();
    const int tau = 2, bins = 5;
    if (y.size() < static_cast<std::size_t>(tau) + 2) return kNaN;
    const auto [lo_it, hi_it] = std::minmax_element(y.begin(), y.end());
    const double lo = *lo_it;
    double width = (*hi_it - lo) / bins;
    if (width <= 0.0) return 0.0;
    const std::size_t pairs = y.size() - static_cast<std::size_t>(tau);
    std::vector<std::vector<double>> joint(bins, std::vector<double>(bins, 0.0));
    auto bin_of = [&](double v) {
        int b = static_cast<int>((v - lo) / width);
        return std::min(b, bins - 1);
    };
    for (std::size_t t = 0; t < pairs; ++t) {
        joint[static_cast<std::size_t>(bin_of(y[t]))][static_cast<std::size_t>(bin_of(y[t + tau]))] +=
            1.0 / static_cast<double>(pairs);
    }
    std::vector<double> px(bins, 0.0), py(bins, 0.0);
    for (int i = 0; i < bins; ++i) {
        for (int j = 0; j < bins; ++j) {
            px[static_cast<std::size_t>(i)] += joint[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            py[static_cast<std::size_t>(j)] += joint[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    double ami = 0.0;
    for (int i = 0; i < bins; ++i) {
        for (int j = 0; j < bins; ++j) {
            const double p = joint[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (p > 0.0) ami += p * std::log(p / (px[static_cast<std::size_t>(i)] * py[static_cast<std::size_t>(j)]));
        }
    }
    return ami;
}

double trev_1_num(const SeriesContext& ctx) {
    const auto& z = ctx.zscored;
    if (z.size() < 2) return kNaN;
    double s = 0.0;
    for (std::size_t t = 0; t + 1 < z.size(); ++t) {
        const double d = z[t + 1] - z[t];
        s += d * d * d;
    }
    return s / static_cast<double>(z.size() - 1);
}

double pnn40(const SeriesContext& ctx) {
    const auto& z = ctx.zscored;
    if (z.size() < 2) return kNaN;
    int count = 0;
    for (std::size_t t = 0; t + 1 < z.size(); ++t) {
        if (std::fabs(z[t + 1] - z[t]) > 0.04) ++count;
    }
    return static_cast<double>(count) / static_cast<double>(z.size() - 1);
}

namespace {

double longest_run(const std::vector<bool>& b) {
    int best = 0, cur = 0;
    for (bool v : b) {
        cur = v ? cur + 1 : 0;
        best = std::max(best, cur);
    }
    return static_cast<double>(best);
}

} // namespace

double longest_stretch_above_mean(const SeriesContext& ctx) {
    std::vector<bool> b(ctx.n());
    for (std::size_t i = 0; i < ctx.n(); ++i) b[i] = ctx.zscored[i] > 0.0;
    return longest_run(b);
}

double longest_stretch_decreasing(const SeriesContext& ctx) {
    const auto& y = ctx.data();
    if (y.size() < 2) return 0.0;
    std::vector<bool> b(y.size() - 1);
    for (std::size_t t = 0; t + 1 < y.size(); ++t) b[t] = y[t + 1] - y[t] <= 0.0;
    return longest_run(b);
}

namespace {

// tercile symbolization of v into classes 0/1/2
std::vector<int> tercile_symbols(const std::vector<double>& v) {
    const double q1 = core::quantile_of(v, 1.0 / 3.0);
    const double q2 = core::quantile_of(v, 2.0 / 3.0);
    std::vector<int> s(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) s[i] = v[i] <= q1 ? 0 : (v[i] <= q2 ? 1 : 2);
    return s;
}

} // namespace

double transition_matrix_3ac_sumdiagcov(const SeriesContext& ctx) {
    const int tau = std::max(1, first_zero_acf(ctx));
    std::vector<double> down;
    for (std::size_t t = 0; t < ctx.n(); t += static_cast<std::size_t>(tau)) down.push_back(ctx.zscored[t]);
    if (down.size() < 5) return kNaN;
    const auto sym = tercile_symbols(down);
    double tm[3][3] = {{0}};
    const double total = static_cast<double>(sym.size() - 1);
    for (std::size_t t = 0; t + 1 < sym.size(); ++t) {
        tm[sym[t]][sym[t + 1]] += 1.0 / total;
    }
    // covariance of the three columns (divisor 2)
    double colmean[3];
    for (int j = 0; j < 3; ++j) colmean[j] = (tm[0][j] + tm[1][j] + tm[2][j]) / 3.0;
    double sumdiag = 0.0;
    for (int j = 0; j < 3; ++j) {
        double var = 0.0;
        for (int i = 0; i < 3; ++i) var += (tm[i][j] - colmean[j]) * (tm[i][j] - colmean[j]);
        sumdiag += var / 2.0;
    }
    return sumdiag;
}

double periodicity_wang(const SeriesContext& ctx) {
    const auto& y = ctx.data();
    const std::size_t n = y.size();
    if (n < 8) return 0.0;
    // quadratic polynomial detrend stands in for the spline
    std::vector<std::vector<double>> cols(3, std::vector<double>(n));
    for (std::size_t t = 0; t < n; ++t) {
        const double u = static_cast<double>(t) / static_cast<double>(n - 1);
        cols[0][t] = 1.0;
        cols[1][t] = u;
        cols[2][t] = u * u;
    }
    std::vector<double> beta;
    std::vector<double> det(n);
    if (util::ols(cols, y, beta)) {
        for (std::size_t t = 0; t < n; ++t) {
            const double u = static_cast<double>(t) / static_cast<double>(n - 1);
            det[t] = y[t] - (beta[0] + beta[1] * u + beta[2] * u * u);
        }
    } else {
        det = y;
    }
    const int max_lag = static_cast<int>(n) / 3;
    const auto r = core::acf(det, max_lag);
    auto at = [&](int lag) { return lag == 0 ? 1.0 : r[static_cast<std::size_t>(lag - 1)]; };
    const double th = 0.01;
    for (int i = 1; i + 1 < max_lag; ++i) {
        if (at(i) < at(i - 1) && at(i) < at(i + 1)) {
            // trough found; look for the next peak
            for (int j = i + 1; j + 1 < max_lag; ++j) {
                if (at(j) > at(j - 1) && at(j) >= at(j + 1)) {
                    if (at(j) - at(i) >= th && at(j) > 0.0) return static_cast<double>(j);
                    break;
                }
            }
        }
    }
    return 0.0;
}

double embed2_dist_expfit_meandiff(const SeriesContext& ctx) {
    const auto& z = ctx.zscored;
    int tau = first_zero_acf(ctx);
    if (tau > static_cast<int>(ctx.n()) / 10) tau = static_cast<int>(ctx.n()) / 10;
    if (tau < 1) tau = 1;
    const std::size_t m = z.size() - static_cast<std::size_t>(tau);
    if (m < 3) return kNaN;
    std::vector<double> d(m - 1);
    for (std::size_t t = 0; t + 1 < m; ++t) {
        const double dx = z[t + 1] - z[t];
        const double dy = z[t + 1 + static_cast<std::size_t>(tau)] - z[t + static_cast<std::size_t>(tau)];
        d[t] = std::sqrt(dx * dx + dy * dy);
    }
    const double lambda = core::mean_of(d);
    if (lambda <= 0.0) return 0.0;
    // histogram density vs exponential pdf at bin centers
    const int bins = std::max(3, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(d.size())))));
    const auto [lo_it, hi_it] = std::minmax_element(d.begin(), d.end());
    const double lo = *lo_it, hi = *hi_it;
    if (hi <= lo) return 0.0;
    const double width = (hi - lo) / bins;
    std::vector<double> density(static_cast<std::size_t>(bins), 0.0);
    for (double v : d) {
        int b = static_cast<int>((v - lo) / width);
        if (b >= bins) b = bins - 1;
        density[static_cast<std::size_t>(b)] += 1.0 / (static_cast<double>(d.size()) * width);
    }
    double diff = 0.0;
    for (int b = 0; b < bins; ++b) {
        const double center = lo + (b + 0.5) * width;
        const double pdf = std::exp(-center / lambda) / lambda;
        diff += std::fabs(density[static_cast<std::size_t>(b)] - pdf);
    }
    return diff / bins;
}

double ami_first_min_40(const SeriesContext& ctx) {
    const std::size_t max_tau = std::min<std::size_t>(40, ctx.full_acf.size());
    if (max_tau < 3) return kNaN;
    std::vector<double> ami(max_tau);
    for (std::size_t k = 0; k < max_tau; ++k) {
        const double r = std::clamp(ctx.full_acf[k], -0.999999, 0.999999);
        ami[k] = -0.5 * std::log(1.0 - r * r);
    }
    for (std::size_t i = 1; i + 1 < max_tau; ++i) {
        if (ami[i] < ami[i - 1] && ami[i] < ami[i + 1]) return static_cast<double>(i + 1);
    }
    return static_cast<double>(max_tau);
}

double local_mean_tauresrat(const SeriesContext& ctx) {
    const auto& y = ctx.data();
    if (y.size() < 4) return kNaN;
    std::vector<double> res(y.size() - 1);
    for (std::size_t t = 0; t + 1 < y.size(); ++t) res[t] = y[t + 1] - y[t];
    SeriesContext res_ctx = make_context(res);
    const double denom = static_cast<double>(first_zero_acf(ctx));
    if (denom == 0.0) return kNaN;
    return static_cast<double>(first_zero_acf(res_ctx)) / denom;
}

double outlier_include_mdrmd(const SeriesContext& ctx, bool positive) {
    const auto& z = ctx.zscored;
    const std::size_t n = z.size();
    if (n < 4) return kNaN;
    std::vector<double> rel_medians;
    for (int j = 0;; ++j) {
        const double th = 0.01 * j;
        std::vector<double> times;
        for (std::size_t t = 0; t < n; ++t) {
            const double v = positive ? z[t] : -z[t];
            if (v >= th) times.push_back(static_cast<double>(t + 1));
        }
        if (times.size() < 2) break;
        rel_medians.push_back(core::median_of(times) / static_cast<double>(n));
        if (j > 400) break;
    }
    if (rel_medians.empty()) return 0.0;
    return core::median_of(rel_medians) - 0.5;
}

double spectral_area_low_fifth(const SeriesContext& ctx) {
    const auto& p = ctx.power;
    if (p.size() < 5) return kNaN;
    double total = 0.0;
    for (double v : p) total += v;
    if (total <= 0.0) return 0.0;
    double low = 0.0;
    for (std::size_t i = 0; i < p.size() / 5; ++i) low += p[i];
    return low / total;
}

double motif_three_quantile_hh(const SeriesContext& ctx) {
    const auto& y = ctx.data();
    if (y.size() < 4) return kNaN;
    const auto sym = tercile_symbols(y);
    double joint[3][3] = {{0}};
    const double total = static_cast<double>(sym.size() - 1);
    for (std::size_t t = 0; t + 1 < sym.size(); ++t) joint[sym[t]][sym[t + 1]] += 1.0 / total;
    double hh = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (joint[i][j] > 0.0) hh -= joint[i][j] * std::log(joint[i][j]);
        }
    }
    return hh;
}

double fluct_anal_prop_r1(const SeriesContext& ctx, bool dfa) {
    const auto& z = ctx.zscored;
    const std::size_t n = z.size();
    if (n < 40) return kNaN;
    std::vector<double> cumsum(n);
    double acc = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        acc += z[t];
        cumsum[t] = acc;
    }
    // 50 logarithmic scales in [5, n/2]
    std::vector<int> scales;
    const double lo = 5.0, hi = static_cast<double>(n) / 2.0;
    for (int q = 0; q < 50; ++q) {
        const int tau = static_cast<int>(std::round(lo * std::pow(hi / lo, q / 49.0)));
        if (scales.empty() || tau > scales.back()) scales.push_back(tau);
    }
    if (scales.size() < 12) return kNaN;

    std::vector<double> log_tau, log_f;
    for (int tau : scales) {
        const std::size_t buffers = n / static_cast<std::size_t>(tau);
        if (buffers < 1) continue;
        double agg = 0.0;
        for (std::size_t b = 0; b < buffers; ++b) {
            const std::size_t begin = b * static_cast<std::size_t>(tau);
            // linear fit within the window
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            for (int i = 0; i < tau; ++i) {
                const double x = static_cast<double>(i);
                const double yv = cumsum[begin + static_cast<std::size_t>(i)];
                sx += x;
                sy += yv;
                sxx += x * x;
                sxy += x * yv;
            }
            const double det = tau * sxx - sx * sx;
            const double slope = det == 0.0 ? 0.0 : (tau * sxy - sx * sy) / det;
            const double intercept = (sy - slope * sx) / tau;
            if (dfa) {
                double ss = 0.0;
                for (int i = 0; i < tau; ++i) {
                    const double r = cumsum[begin + static_cast<std::size_t>(i)] - (intercept + slope * i);
                    ss += r * r;
                }
                agg += ss / tau;
            } else {
                double rmin = 1e300, rmax = -1e300;
                for (int i = 0; i < tau; ++i) {
                    const double r = cumsum[begin + static_cast<std::size_t>(i)] - (intercept + slope * i);
                    rmin = std::min(rmin, r);
                    rmax = std::max(rmax, r);
                }
                agg += (rmax - rmin) * (rmax - rmin);
            }
        }
        const double f = std::sqrt(agg / static_cast<double>(buffers));
        if (f > 0.0) {
            log_tau.push_back(std::log(static_cast<double>(tau)));
            log_f.push_back(std::log(f));
        }
    }
    const std::size_t ntt = log_tau.size();
    if (ntt < 12) return kNaN;

    auto line_sse = [&](std::size_t from, std::size_t to) {
        const std::size_t m = to - from;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = from; i < to; ++i) {
            sx += log_tau[i];
            sy += log_f[i];
            sxx += log_tau[i] * log_tau[i];
            sxy += log_tau[i] * log_f[i];
        }
        const double det = static_cast<double>(m) * sxx - sx * sx;
        const double slope = det == 0.0 ? 0.0 : (static_cast<double>(m) * sxy - sx * sy) / det;
        const double intercept = (sy - slope * sx) / static_cast<double>(m);
        double sse = 0.0;
        for (std::size_t i = from; i < to; ++i) {
            const double r = log_f[i] - (intercept + slope * log_tau[i]);
            sse += r * r;
        }
        return sse;
    };

    const std::size_t min_points = 6;
    std::size_t best_split = min_points;
    double best_sse = 1e300;
    for (std::size_t split = min_points; split + min_points <= ntt; ++split) {
        const double sse = line_sse(0, split) + line_sse(split - 1, ntt);
        if (sse < best_sse) {
            best_sse = sse;
            best_split = split;
        }
    }
    return static_cast<double>(best_split) / static_cast<double>(ntt);
}

double spectral_centroid(const SeriesContext& ctx) {
    const auto& p = ctx.power;
    if (p.size() < 4) return kNaN;
    double total = 0.0;
    for (double v : p) total += v;
    if (total <= 0.0) return 0.0;
    double cum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        cum += p[i];
        if (cum >= 0.5 * total) {
            return M_PI * static_cast<double>(i + 1) / static_cast<double>(p.size());
        }
    }
    return M_PI;
}

double local_mean3_stderr(const SeriesContext& ctx) {
    const auto& z = ctx.zscored;
    const int train = 3;
    if (z.size() < static_cast<std::size_t>(train) + 2) return kNaN;
    std::vector<double> res(z.size() - static_cast<std::size_t>(train));
    for (std::size_t t = 0; t + static_cast<std::size_t>(train) < z.size(); ++t) {
        double m = 0.0;
        for (int i = 0; i < train; ++i) m += z[t + static_cast<std::size_t>(i)];
        res[t] = z[t + static_cast<std::size_t>(train)] - m / train;
    }
    return core::stddev_of(res);
}

} // namespace metafor::features
