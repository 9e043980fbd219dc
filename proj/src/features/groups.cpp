#include "metafor/features/groups.hpp"
#include "metafor/core/tsmath.hpp"
#include "metafor/models/decompose.hpp"
#include "metafor/util/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace metafor::features {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double pop_variance(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    const double m = core::mean_of(v);
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    return ss / static_cast<double>(v.size());
}

double strength(const std::vector<double>& component_plus_rem, const std::vector<double>& rem) {
    const double denom = core::variance_of(component_plus_rem);
    if (denom <= 0.0) return 0.0;
    return std::max(0.0, 1.0 - core::variance_of(rem) / denom);
}

// Anis-Lloyd expected rescaled range of an iid sequence; used to de-bias the
// small-window R/S slope.
double expected_rs(int w) {
    double sum = 0.0;
    for (int i = 1; i < w; ++i) sum += std::sqrt(static_cast<double>(w - i) / i);
    const double front = (w - 0.5) / w;
    if (w <= 340) {
        const double ratio = std::exp(std::lgamma(0.5 * (w - 1)) - std::lgamma(0.5 * w)) / std::sqrt(M_PI);
        return front * ratio * sum;
    }
    return front * sum / std::sqrt(0.5 * M_PI * w);
}

} // namespace

StlFeatures stl_features(const std::vector<double>& y, int period) {
    StlFeatures out;
    const std::size_t n = y.size();
    const bool seasonal = period >= 2 && n >= 2 * static_cast<std::size_t>(period);

    std::vector<double> trend, seas, rem_full;
    if (seasonal) {
        models::Decomposition d = models::classical_decomposition(y, period, false);
        trend = d.trend;
        seas = d.seasonal;
        rem_full = d.remainder;
        std::size_t peak = 0, trough = 0;
        for (std::size_t p = 1; p < d.indices.size(); ++p) {
            if (d.indices[p] > d.indices[peak]) peak = p;
            if (d.indices[p] < d.indices[trough]) trough = p;
        }
        out.peak = static_cast<double>(peak + 1);
        out.trough = static_cast<double>(trough + 1);
    } else {
        const int w = std::max(3, std::min(static_cast<int>(n) | 1, 11));
        trend = models::centered_moving_average(y, w);
        seas.assign(n, 0.0);
        rem_full.resize(n);
        for (std::size_t t = 0; t < n; ++t) {
            rem_full[t] = std::isnan(trend[t]) ? kNaN : y[t] - trend[t];
        }
        out.peak = kNaN;
        out.trough = kNaN;
        out.seasonal_strength = kNaN;
    }

    // interior slice where the trend is defined
    std::vector<double> rem, trend_in, deseason, seas_plus_rem;
    std::vector<double> tt;
    for (std::size_t t = 0; t < n; ++t) {
        if (std::isnan(trend[t]) || std::isnan(rem_full[t])) continue;
        rem.push_back(rem_full[t]);
        trend_in.push_back(trend[t]);
        deseason.push_back(trend[t] + rem_full[t]);
        seas_plus_rem.push_back(seas[t] + rem_full[t]);
        tt.push_back(static_cast<double>(t));
    }
    if (rem.size() < 4) {
        out.trend_strength = kNaN;
        out.seasonal_strength = kNaN;
        out.spike = kNaN;
        out.linearity = kNaN;
        out.curvature = kNaN;
        out.e_acf1 = kNaN;
        out.e_acf10 = kNaN;
        return out;
    }

    out.trend_strength = strength(deseason, rem);
    if (seasonal) out.seasonal_strength = strength(seas_plus_rem, rem);

    // spike: variance of leave-one-out variances of the remainder
    {
        const std::size_t m = rem.size();
        double s1 = 0.0, s2 = 0.0;
        for (double v : rem) {
            s1 += v;
            s2 += v * v;
        }
        std::vector<double> loo(m);
        for (std::size_t i = 0; i < m; ++i) {
            const double rs1 = s1 - rem[i];
            const double rs2 = s2 - rem[i] * rem[i];
            const double k = static_cast<double>(m - 1);
            loo[i] = (rs2 - rs1 * rs1 / k) / (k - 1.0);
        }
        out.spike = core::variance_of(loo);
    }

    // linearity / curvature: coefficients on an orthonormal quadratic basis in time
    {
        const std::size_t m = tt.size();
        std::vector<double> p1(m), p2(m);
        const double tmean = core::mean_of(tt);
        double norm1 = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            p1[i] = tt[i] - tmean;
            norm1 += p1[i] * p1[i];
        }
        norm1 = std::sqrt(norm1);
        if (norm1 > 0) {
            for (auto& v : p1) v /= norm1;
        }
        double dot1 = 0.0, mean2 = 0.0;
        for (std::size_t i = 0; i < m; ++i) mean2 += tt[i] * tt[i];
        mean2 /= static_cast<double>(m);
        for (std::size_t i = 0; i < m; ++i) dot1 += (tt[i] * tt[i] - mean2) * p1[i];
        double norm2 = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            p2[i] = tt[i] * tt[i] - mean2 - dot1 * p1[i];
            norm2 += p2[i] * p2[i];
        }
        norm2 = std::sqrt(norm2);
        if (norm2 > 0) {
            for (auto& v : p2) v /= norm2;
        }
        double lin = 0.0, curv = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            lin += p1[i] * trend_in[i];
            curv += p2[i] * trend_in[i];
        }
        out.linearity = lin;
        out.curvature = curv;
    }

    const auto racf = core::acf(rem, 10);
    out.e_acf1 = racf.empty() ? kNaN : racf[0];
    double ss = 0.0;
    for (double r : racf) ss += r * r;
    out.e_acf10 = ss;
    return out;
}

StationarityStats stationarity_stats(const std::vector<double>& y) {
    StationarityStats s;
    s.adf_stat = core::adf_statistic(y);
    s.kpss_level = core::kpss_statistic(y, false);
    s.kpss_trend = core::kpss_statistic(y, true);
    s.pp_stat = core::pp_statistic(y);
    return s;
}

namespace {

// entropy estimators are evaluated on a bounded tail window for cost control
std::vector<double> entropy_window(const std::vector<double>& y) {
    const std::size_t cap = 1000;
    if (y.size() <= cap) return y;
    return std::vector<double>(y.end() - static_cast<long>(cap), y.end());
}

double sampen_like(const std::vector<double>& y, bool approximate) {
    const std::vector<double> x = entropy_window(y);
    const std::size_t n = x.size();
    const int m = 2;
    if (n < static_cast<std::size_t>(m) + 2) return kNaN;
    const double sd = std::sqrt(pop_variance(x));
    const double r = 0.2 * sd;
    if (r <= 0.0) return 0.0;

    auto phi_counts = [&](int dim, bool self_match, std::vector<double>& out) {
        const std::size_t count = n - static_cast<std::size_t>(dim) + 1;
        out.assign(count, 0.0);
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = 0; j < count; ++j) {
                if (!self_match && i == j) continue;
                bool match = true;
                for (int k = 0; k < dim; ++k) {
                    if (std::fabs(x[i + static_cast<std::size_t>(k)] - x[j + static_cast<std::size_t>(k)]) > r) {
                        match = false;
                        break;
                    }
                }
                if (match) out[i] += 1.0;
            }
        }
    };

    if (approximate) {
        std::vector<double> c2, c3;
        phi_counts(m, true, c2);
        phi_counts(m + 1, true, c3);
        double phi2 = 0.0, phi3 = 0.0;
        for (double c : c2) phi2 += std::log(c / static_cast<double>(c2.size()));
        for (double c : c3) phi3 += std::log(c / static_cast<double>(c3.size()));
        phi2 /= static_cast<double>(c2.size());
        phi3 /= static_cast<double>(c3.size());
        return phi2 - phi3;
    }
    std::vector<double> c2, c3;
    phi_counts(m, false, c2);
    phi_counts(m + 1, false, c3);
    double a = 0.0, b = 0.0;
    for (std::size_t i = 0; i < c3.size(); ++i) {
        a += c3[i];
        b += c2[i];
    }
    if (a <= 0.0 || b <= 0.0) return kNaN;
    return -std::log(a / b);
}

} // namespace

ComplexityStats complexity_stats(const std::vector<double>& y) {
    ComplexityStats out;
    const std::size_t n = y.size();

    // rescaled-range and detrended-fluctuation exponents over shared scales
    {
        std::vector<int> scales;
        for (int q = 0; q < 12; ++q) {
            const int w = static_cast<int>(std::round(8.0 * std::pow(static_cast<double>(n) / 16.0, q / 11.0)));
            if (w >= 8 && w <= static_cast<int>(n) / 2 && (scales.empty() || w > scales.back())) {
                scales.push_back(w);
            }
        }
        std::vector<double> lw_rs, lrs, lw_dfa, lf;
        const double ymean = core::mean_of(y);
        std::vector<double> profile(n);
        double acc = 0.0;
        for (std::size_t t = 0; t < n; ++t) {
            acc += y[t] - ymean;
            profile[t] = acc;
        }
        for (int w : scales) {
            const std::size_t blocks = n / static_cast<std::size_t>(w);
            if (blocks == 0) continue;
            double rs_sum = 0.0;
            int rs_cnt = 0;
            double f_sum = 0.0;
            for (std::size_t b = 0; b < blocks; ++b) {
                const std::size_t begin = b * static_cast<std::size_t>(w);
                // R/S on the raw block
                double bm = 0.0;
                for (int i = 0; i < w; ++i) bm += y[begin + static_cast<std::size_t>(i)];
                bm /= w;
                double cum = 0.0, lo = 1e300, hi = -1e300, ss = 0.0;
                for (int i = 0; i < w; ++i) {
                    const double d = y[begin + static_cast<std::size_t>(i)] - bm;
                    cum += d;
                    lo = std::min(lo, cum);
                    hi = std::max(hi, cum);
                    ss += d * d;
                }
                const double s = std::sqrt(ss / w);
                if (s > 0.0) {
                    rs_sum += (hi - lo) / s;
                    ++rs_cnt;
                }
                // DFA on the profile
                double sx = 0, sy = 0, sxx = 0, sxy = 0;
                for (int i = 0; i < w; ++i) {
                    sx += i;
                    sy += profile[begin + static_cast<std::size_t>(i)];
                    sxx += static_cast<double>(i) * i;
                    sxy += i * profile[begin + static_cast<std::size_t>(i)];
                }
                const double det = w * sxx - sx * sx;
                const double slope = det == 0.0 ? 0.0 : (w * sxy - sx * sy) / det;
                const double inter = (sy - slope * sx) / w;
                double fr = 0.0;
                for (int i = 0; i < w; ++i) {
                    const double r = profile[begin + static_cast<std::size_t>(i)] - (inter + slope * i);
                    fr += r * r;
                }
                f_sum += fr / w;
            }
            if (rs_cnt > 0) {
                lw_rs.push_back(std::log(static_cast<double>(w)));
                lrs.push_back(std::log(rs_sum / rs_cnt) - std::log(expected_rs(w)));
            }
            const double f = std::sqrt(f_sum / static_cast<double>(blocks));
            if (f > 0.0) {
                lw_dfa.push_back(std::log(static_cast<double>(w)));
                lf.push_back(std::log(f));
            }
        }
        auto slope_of = [](const std::vector<double>& xs, const std::vector<double>& ys) {
            if (xs.size() < 3) return kNaN;
            const double xm = core::mean_of(xs), ym = core::mean_of(ys);
            double num = 0.0, den = 0.0;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                num += (xs[i] - xm) * (ys[i] - ym);
                den += (xs[i] - xm) * (xs[i] - xm);
            }
            return den == 0.0 ? kNaN : num / den;
        };
        const double corrected = slope_of(lw_rs, lrs);
        out.hurst_rs = std::isnan(corrected) ? kNaN : 0.5 + corrected;
        out.dfa_exponent = slope_of(lw_dfa, lf);
    }

    // Higuchi fractal dimension
    {
        const int kmax = std::max(2, std::min(10, static_cast<int>(n) / 4));
        std::vector<double> lk, ll;
        for (int k = 1; k <= kmax; ++k) {
            double lsum = 0.0;
            int mcnt = 0;
            for (int m = 0; m < k; ++m) {
                const int terms = static_cast<int>((static_cast<int>(n) - 1 - m) / k);
                if (terms < 1) continue;
                double length = 0.0;
                for (int i = 1; i <= terms; ++i) {
                    length += std::fabs(y[static_cast<std::size_t>(m + i * k)] -
                                        y[static_cast<std::size_t>(m + (i - 1) * k)]);
                }
                length *= static_cast<double>(n - 1) / (static_cast<double>(terms) * k * k);
                lsum += length;
                ++mcnt;
            }
            if (mcnt > 0 && lsum > 0.0) {
                lk.push_back(std::log(1.0 / k));
                ll.push_back(std::log(lsum / mcnt));
            }
        }
        if (lk.size() >= 3) {
            const double xm = core::mean_of(lk), ym = core::mean_of(ll);
            double num = 0.0, den = 0.0;
            for (std::size_t i = 0; i < lk.size(); ++i) {
                num += (lk[i] - xm) * (ll[i] - ym);
                den += (lk[i] - xm) * (lk[i] - xm);
            }
            out.higuchi_fd = den == 0.0 ? kNaN : num / den;
        } else {
            out.higuchi_fd = kNaN;
        }
    }

    // madogram estimator over lags 1 and 2
    {
        if (n >= 4) {
            double g1 = 0.0, g2 = 0.0;
            for (std::size_t t = 1; t < n; ++t) g1 += std::fabs(y[t] - y[t - 1]);
            for (std::size_t t = 2; t < n; ++t) g2 += std::fabs(y[t] - y[t - 2]);
            g1 = 0.5 * g1 / static_cast<double>(n - 1);
            g2 = 0.5 * g2 / static_cast<double>(n - 2);
            if (g1 > 0.0 && g2 > 0.0) {
                out.madogram_fd = 2.0 - (std::log(g2) - std::log(g1)) / std::log(2.0);
            } else {
                out.madogram_fd = kNaN;
            }
        } else {
            out.madogram_fd = kNaN;
        }
    }

    out.approx_entropy = sampen_like(y, true);
    out.sample_entropy = sampen_like(y, false);

    {
        const auto power = core::periodogram(y);
        if (power.size() >= 4) {
            double total = 0.0;
            for (double p : power) total += p;
            if (total > 0.0) {
                double h = 0.0;
                for (double p : power) {
                    const double q = p / total;
                    if (q > 0.0) h -= q * std::log(q);
                }
                out.spectral_entropy = h / std::log(static_cast<double>(power.size()));
            } else {
                out.spectral_entropy = 0.0;
            }
        } else {
            out.spectral_entropy = kNaN;
        }
    }
    return out;
}

AnomalyStats anomaly_stats(const std::vector<double>& y, int period) {
    AnomalyStats out;
    const std::size_t n = y.size();

    const double med = core::median_of(y);
    std::vector<double> absdev(n);
    for (std::size_t t = 0; t < n; ++t) absdev[t] = std::fabs(y[t] - med);
    const double mad = core::median_of(absdev);
    const double tukey_fence = 3.0 * 1.4826 * mad;
    int beyond = 0;
    for (double d : absdev) {
        if (d > tukey_fence) ++beyond;
    }
    out.tukey_mad_fraction = static_cast<double>(beyond) / static_cast<double>(n);

    // remainder of a decomposition (or a linear detrend when undecomposable)
    std::vector<double> rem;
    std::vector<std::size_t> pos;
    if (period >= 2 && n >= 2 * static_cast<std::size_t>(period)) {
        models::Decomposition d = models::classical_decomposition(y, period, false);
        for (std::size_t t = 0; t < n; ++t) {
            if (!std::isnan(d.remainder[t])) {
                rem.push_back(d.remainder[t]);
                pos.push_back(t);
            }
        }
    } else {
        std::vector<std::vector<double>> cols(2, std::vector<double>(n));
        for (std::size_t t = 0; t < n; ++t) {
            cols[0][t] = 1.0;
            cols[1][t] = static_cast<double>(t);
        }
        std::vector<double> beta{0.0, 0.0};
        util::ols(cols, y, beta);
        for (std::size_t t = 0; t < n; ++t) {
            rem.push_back(y[t] - beta[0] - beta[1] * static_cast<double>(t));
            pos.push_back(t);
        }
    }

    const double q1 = core::quantile_of(rem, 0.25);
    const double q3 = core::quantile_of(rem, 0.75);
    const double iqr = q3 - q1;
    const double lo = q1 - 1.5 * iqr;
    const double hi = q3 + 1.5 * iqr;
    int npos = 0, nneg = 0;
    long last_pos = -1, last_neg = -1;
    for (std::size_t i = 0; i < rem.size(); ++i) {
        if (rem[i] > hi) {
            ++npos;
            last_pos = static_cast<long>(pos[i]);
        } else if (rem[i] < lo) {
            ++nneg;
            last_neg = static_cast<long>(pos[i]);
        }
    }
    const double count = static_cast<double>(rem.size());
    out.iqr_fraction = (npos + nneg) / count;
    out.iqr_fraction_pos = npos / count;
    out.iqr_fraction_neg = nneg / count;
    out.last_anomaly_pos_rel = last_pos < 0 ? kNaN : static_cast<double>(last_pos + 1) / static_cast<double>(n);
    out.last_anomaly_neg_rel = last_neg < 0 ? kNaN : static_cast<double>(last_neg + 1) / static_cast<double>(n);
    return out;
}

ShapeStats shape_stats(const std::vector<double>& y, int period) {
    ShapeStats out;
    const std::size_t n = y.size();
    out.skewness = core::skewness_of(y);
    out.kurtosis = core::kurtosis_of(y);

    const double med = core::median_of(y);
    int crossings = 0;
    for (std::size_t t = 1; t < n; ++t) {
        const bool a = y[t - 1] > med;
        const bool b = y[t] > med;
        if (a != b) ++crossings;
    }
    out.crossing_points_fraction = static_cast<double>(crossings) / static_cast<double>(n - 1);

    // flat spots: longest run within one of 10 equal-width bins
    {
        const auto [lo_it, hi_it] = std::minmax_element(y.begin(), y.end());
        const double lo = *lo_it, hi = *hi_it;
        int run = 1, best = 1;
        if (hi <= lo) {
            best = static_cast<int>(n);
        } else {
            const double width = (hi - lo) / 10.0;
            auto bin_of = [&](double v) { return std::min(9, static_cast<int>((v - lo) / width)); };
            for (std::size_t t = 1; t < n; ++t) {
                run = bin_of(y[t]) == bin_of(y[t - 1]) ? run + 1 : 1;
                best = std::max(best, run);
            }
        }
        out.longest_flat_run = static_cast<double>(best);
        out.flat_spots_fraction = static_cast<double>(best) / static_cast<double>(n);
    }

    // tiled-window means and variances at the seasonal width
    {
        const std::size_t w = static_cast<std::size_t>(std::max(2, period));
        const std::size_t tiles = n / w;
        if (tiles >= 2) {
            std::vector<double> means(tiles), vars(tiles);
            for (std::size_t b = 0; b < tiles; ++b) {
                std::vector<double> win(y.begin() + static_cast<long>(b * w),
                                        y.begin() + static_cast<long>((b + 1) * w));
                means[b] = core::mean_of(win);
                vars[b] = core::variance_of(win);
            }
            out.stability = core::variance_of(means);
            out.lumpiness = core::variance_of(vars);
        } else {
            out.stability = 0.0;
            out.lumpiness = 0.0;
        }
    }

    // nonlinearity: cubic terms of the lagged regression explain the residual
    {
        if (n >= 12) {
            const std::size_t rows = n - 1;
            std::vector<std::vector<double>> base(2, std::vector<double>(rows));
            std::vector<double> target(rows);
            for (std::size_t t = 1; t < n; ++t) {
                base[0][t - 1] = 1.0;
                base[1][t - 1] = y[t - 1];
                target[t - 1] = y[t];
            }
            std::vector<double> beta;
            if (util::ols(base, target, beta)) {
                std::vector<double> resid(rows);
                for (std::size_t i = 0; i < rows; ++i) resid[i] = target[i] - beta[0] - beta[1] * base[1][i];
                std::vector<std::vector<double>> aux(4, std::vector<double>(rows));
                for (std::size_t i = 0; i < rows; ++i) {
                    const double v = base[1][i];
                    aux[0][i] = 1.0;
                    aux[1][i] = v;
                    aux[2][i] = v * v;
                    aux[3][i] = v * v * v;
                }
                std::vector<double> gamma;
                if (util::ols(aux, resid, gamma)) {
                    double sse = 0.0, sst = 0.0;
                    const double rm = core::mean_of(resid);
                    for (std::size_t i = 0; i < rows; ++i) {
                        double pred = 0.0;
                        for (std::size_t c = 0; c < 4; ++c) pred += gamma[c] * aux[c][i];
                        sse += (resid[i] - pred) * (resid[i] - pred);
                        sst += (resid[i] - rm) * (resid[i] - rm);
                    }
                    out.nonlinearity = sst <= 0.0 ? 0.0 : static_cast<double>(rows) * (1.0 - sse / sst);
                }
            }
        } else {
            out.nonlinearity = kNaN;
        }
    }

    // squared-residual autoregression fit
    {
        const std::size_t lags = std::min<std::size_t>(12, n / 4);
        if (lags >= 1 && n >= lags + 8) {
            const double m = core::mean_of(y);
            std::vector<double> sq(n);
            for (std::size_t t = 0; t < n; ++t) sq[t] = (y[t] - m) * (y[t] - m);
            const std::size_t rows = n - lags;
            std::vector<std::vector<double>> cols(lags + 1, std::vector<double>(rows));
            std::vector<double> target(rows);
            for (std::size_t i = 0; i < rows; ++i) {
                cols[0][i] = 1.0;
                for (std::size_t j = 1; j <= lags; ++j) cols[j][i] = sq[i + lags - j];
                target[i] = sq[i + lags];
            }
            std::vector<double> beta;
            if (util::ols(cols, target, beta)) {
                double sse = 0.0, sst = 0.0;
                const double tm = core::mean_of(target);
                for (std::size_t i = 0; i < rows; ++i) {
                    double pred = 0.0;
                    for (std::size_t c = 0; c < cols.size(); ++c) pred += beta[c] * cols[c][i];
                    sse += (target[i] - pred) * (target[i] - pred);
                    sst += (target[i] - tm) * (target[i] - tm);
                }
                out.arch_lm = sst <= 0.0 ? 0.0 : std::max(0.0, 1.0 - sse / sst);
            }
        } else {
            out.arch_lm = kNaN;
        }
    }
    return out;
}

double jarque_bera_stat(const std::vector<double>& y) {
    const std::size_t n = y.size();
    if (n < 8) return kNaN;
    const double s = core::skewness_of(y);
    const double k = core::kurtosis_of(y);
    return static_cast<double>(n) / 6.0 * (s * s + (k - 3.0) * (k - 3.0) / 4.0);
}

double anderson_darling_stat(const std::vector<double>& y) {
    const std::size_t n = y.size();
    if (n < 8) return kNaN;
    const double m = core::mean_of(y);
    const double sd = core::stddev_of(y);
    if (sd <= 0.0) return 0.0;
    std::vector<double> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = (y[i] - m) / sd;
    std::sort(z.begin(), z.end());
    auto phi = [](double x) { return 0.5 * (1.0 + std::erf(x / std::sqrt(2.0))); };
    double a2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double f1 = std::clamp(phi(z[i]), 1e-12, 1.0 - 1e-12);
        const double f2 = std::clamp(phi(z[n - 1 - i]), 1e-12, 1.0 - 1e-12);
        a2 += (2.0 * static_cast<double>(i) + 1.0) * (std::log(f1) + std::log(1.0 - f2));
    }
    return -static_cast<double>(n) - a2 / static_cast<double>(n);
}

} // namespace metafor::features
