#include "metafor/models/arima.hpp"
#include "metafor/core/tsmath.hpp"
#include "metafor/models/decompose.hpp"
#include "metafor/models/optim.hpp"
#include "metafor/util/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace metafor::models {

std::string ArimaOrder::label() const {
    std::string s = "(" + std::to_string(p) + "," + std::to_string(d) + "," + std::to_string(q) + ")";
    if (period > 1) {
        s += "(" + std::to_string(sp) + "," + std::to_string(sd) + "," + std::to_string(sq) + ")[" +
             std::to_string(period) + "]";
    }
    if (constant) s += "+c";
    return s;
}

namespace {

std::vector<double> difference(const std::vector<double>& y, int lag, int times) {
    std::vector<double> out = y;
    for (int i = 0; i < times; ++i) {
        if (out.size() <= static_cast<std::size_t>(lag)) return {};
        std::vector<double> next(out.size() - static_cast<std::size_t>(lag));
        for (std::size_t t = static_cast<std::size_t>(lag); t < out.size(); ++t) {
            next[t - static_cast<std::size_t>(lag)] = out[t] - out[t - static_cast<std::size_t>(lag)];
        }
        out = std::move(next);
    }
    return out;
}

// Monahan map from unconstrained values to a stationary AR (or invertible MA)
// coefficient block via partial autocorrelations.
std::vector<double> pacf_to_coeffs(const std::vector<double>& raw) {
    const std::size_t k = raw.size();
    std::vector<double> pac(k), coef(k, 0.0), tmp(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) pac[i] = std::tanh(raw[i]);
    for (std::size_t j = 0; j < k; ++j) {
        coef[j] = pac[j];
        for (std::size_t i = 0; i < j; ++i) tmp[i] = coef[i] - pac[j] * coef[j - 1 - i];
        for (std::size_t i = 0; i < j; ++i) coef[i] = tmp[i];
    }
    return coef;
}

// Expand (1 - a(B)) * (1 - A(B^s)) into combined lag coefficients with the
// convention poly(B) = 1 - sum c_k B^k.
std::vector<double> expand_product_ar(const std::vector<double>& a, const std::vector<double>& sa,
                                      int period) {
    const std::size_t len = a.size() + sa.size() * static_cast<std::size_t>(period);
    std::vector<double> c(len, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t j = 0; j < sa.size(); ++j) {
        const std::size_t lag = (j + 1) * static_cast<std::size_t>(period);
        c[lag - 1] += sa[j];
        for (std::size_t i = 0; i < a.size(); ++i) c[lag + i] -= a[i] * sa[j];
    }
    return c;
}

// Expand (1 + b(B)) * (1 + B(B^s)) with the convention poly(B) = 1 + sum c_k B^k.
std::vector<double> expand_product_ma(const std::vector<double>& b, const std::vector<double>& sb,
                                      int period) {
    const std::size_t len = b.size() + sb.size() * static_cast<std::size_t>(period);
    std::vector<double> c(len, 0.0);
    for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    for (std::size_t j = 0; j < sb.size(); ++j) {
        const std::size_t lag = (j + 1) * static_cast<std::size_t>(period);
        c[lag - 1] += sb[j];
        for (std::size_t i = 0; i < b.size(); ++i) c[lag + i] += b[i] * sb[j];
    }
    return c;
}

double css(const std::vector<double>& w, const std::vector<double>& ar, const std::vector<double>& ma,
           double mu, std::size_t ncond, std::vector<double>* resid = nullptr) {
    const std::size_t n = w.size();
    std::vector<double> e(n, 0.0);
    double sse = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        double pred = 0.0;
        for (std::size_t i = 0; i < ar.size(); ++i) {
            if (t > i) pred += ar[i] * (w[t - i - 1] - mu);
        }
        for (std::size_t j = 0; j < ma.size(); ++j) {
            if (t > j) pred += ma[j] * e[t - j - 1];
        }
        e[t] = (w[t] - mu) - pred;
        if (t >= ncond) sse += e[t] * e[t];
    }
    if (resid) *resid = std::move(e);
    return sse;
}

} // namespace

ArimaFit fit_arima(const std::vector<double>& y, const ArimaOrder& order, int ncond_override) {
    ArimaFit fit;
    fit.order = order;

    const std::vector<double> w =
        difference(difference(y, order.period, order.sd), 1, order.d);
    const std::size_t natural =
        static_cast<std::size_t>(order.p) + static_cast<std::size_t>(order.sp * order.period);
    const std::size_t ncond = ncond_override >= 0
                                  ? std::max(natural, static_cast<std::size_t>(ncond_override))
                                  : natural;
    const int dim = order.p + order.q + order.sp + order.sq + (order.constant ? 1 : 0);
    if (w.size() <= ncond || w.size() < ncond + static_cast<std::size_t>(dim) + 3) return fit;
    const std::size_t n_eff = w.size() - ncond;

    const double w_mean = core::mean_of(w);
    const double w_sd = std::max(core::stddev_of(w), 1e-8);

    auto unpack = [&](const std::vector<double>& u, std::vector<double>& ar, std::vector<double>& ma,
                      double& mu) {
        std::size_t at = 0;
        std::vector<double> phi(u.begin() + at, u.begin() + at + order.p);
        at += static_cast<std::size_t>(order.p);
        std::vector<double> theta(u.begin() + at, u.begin() + at + order.q);
        at += static_cast<std::size_t>(order.q);
        std::vector<double> sphi(u.begin() + at, u.begin() + at + order.sp);
        at += static_cast<std::size_t>(order.sp);
        std::vector<double> stheta(u.begin() + at, u.begin() + at + order.sq);
        at += static_cast<std::size_t>(order.sq);
        ar = expand_product_ar(pacf_to_coeffs(phi), pacf_to_coeffs(sphi), order.period);
        ma = expand_product_ma(pacf_to_coeffs(theta), pacf_to_coeffs(stheta), order.period);
        mu = order.constant ? u[at] : 0.0;
    };

    std::vector<double> best_u;
    if (dim == 0) {
        best_u = {};
    } else {
        std::vector<double> x0(static_cast<std::size_t>(dim), 0.0);
        std::vector<double> lo(static_cast<std::size_t>(dim), -4.0);
        std::vector<double> hi(static_cast<std::size_t>(dim), 4.0);
        if (order.constant) {
            x0.back() = w_mean;
            lo.back() = w_mean - 10.0 * w_sd;
            hi.back() = w_mean + 10.0 * w_sd;
        }
        auto obj = [&](const std::vector<double>& u) {
            std::vector<double> ar, ma;
            double mu;
            unpack(u, ar, ma, mu);
            const double sse = css(w, ar, ma, mu, ncond);
            return std::log(std::max(sse, 1e-300));
        };
        best_u = nelder_mead(obj, x0, lo, hi, 120 * dim);
    }

    std::vector<double> ar, ma;
    double mu = 0.0;
    if (dim > 0) {
        unpack(best_u, ar, ma, mu);
    }
    fit.ar = ar;
    fit.ma = ma;
    fit.mu = mu;
    fit.sse = css(w, ar, ma, mu, ncond);
    fit.n_eff = n_eff;
    if (!std::isfinite(fit.sse)) return fit;

    const double sigma2 = std::max(fit.sse / static_cast<double>(n_eff), 1e-300);
    const double loglik = -0.5 * static_cast<double>(n_eff) * (std::log(2.0 * M_PI * sigma2) + 1.0);
    const double k = static_cast<double>(dim) + 1.0; // + sigma^2
    fit.aicc = -2.0 * loglik + 2.0 * k;
    if (static_cast<double>(n_eff) > k + 1.0) {
        fit.aicc += 2.0 * k * (k + 1.0) / (static_cast<double>(n_eff) - k - 1.0);
    } else {
        fit.aicc = std::numeric_limits<double>::infinity();
    }
    fit.ok = true;
    return fit;
}

std::vector<double> arima_forecast(const ArimaFit& fit, const std::vector<double>& y, int horizon) {
    const ArimaOrder& o = fit.order;
    std::vector<double> z = difference(y, o.period, o.sd); // seasonal first
    std::vector<double> w = difference(z, 1, o.d);

    std::vector<double> resid;
    const std::size_t ncond =
        static_cast<std::size_t>(o.p) + static_cast<std::size_t>(o.sp * o.period);
    css(w, fit.ar, fit.ma, fit.mu, ncond, &resid);

    // forecast in the differenced space
    std::vector<double> wx = w;
    std::vector<double> ex = resid;
    std::vector<double> wf(static_cast<std::size_t>(horizon));
    for (int k = 0; k < horizon; ++k) {
        const std::size_t t = wx.size();
        double pred = fit.mu;
        for (std::size_t i = 0; i < fit.ar.size(); ++i) {
            if (t > i) pred += fit.ar[i] * (wx[t - i - 1] - fit.mu);
        }
        for (std::size_t j = 0; j < fit.ma.size(); ++j) {
            if (t > j) pred += fit.ma[j] * ex[t - j - 1];
        }
        wf[static_cast<std::size_t>(k)] = pred;
        wx.push_back(pred);
        ex.push_back(0.0);
    }

    // integrate the regular differences back onto z
    std::vector<double> zf(wf);
    if (o.d > 0) {
        for (int level = o.d - 1; level >= 0; --level) {
            std::vector<double> hist = difference(z, 1, level);
            double last = hist.empty() ? 0.0 : hist.back();
            for (auto& v : zf) {
                v = last + v;
                last = v;
            }
        }
    }
    // integrate seasonal differences back onto y
    std::vector<double> yf(zf);
    if (o.sd > 0) {
        for (int level = o.sd - 1; level >= 0; --level) {
            std::vector<double> hist = difference(y, o.period, level);
            std::vector<double> out(yf.size());
            for (std::size_t k = 0; k < yf.size(); ++k) {
                const std::size_t idx = hist.size() + k;
                const double prev = idx >= static_cast<std::size_t>(o.period)
                                        ? (idx - static_cast<std::size_t>(o.period) < hist.size()
                                               ? hist[idx - static_cast<std::size_t>(o.period)]
                                               : out[k - static_cast<std::size_t>(o.period)])
                                        : 0.0;
                out[k] = prev + yf[k];
            }
            yf = std::move(out);
        }
    }
    return yf;
}

namespace {

int choose_d(const std::vector<double>& z) {
    std::vector<double> cur = z;
    int d = 0;
    while (d < 2 && cur.size() >= 10 && core::kpss_statistic(cur, false) > 0.463) {
        cur = difference(cur, 1, 1);
        ++d;
    }
    return d;
}

} // namespace

AutoArima auto_arima(const std::vector<double>& y, int period, bool seasonal, int horizon) {
    if (y.size() < 10) throw util::DataError("auto arima needs at least 10 observations");

    const bool use_seasonal =
        seasonal && period > 1 && y.size() >= 2 * static_cast<std::size_t>(period) + 6;
    const int s = use_seasonal ? period : 1;
    const int D = use_seasonal && seasonal_strength(y, period) >= 0.64 ? 1 : 0;
    const std::vector<double> z = difference(y, s, D);
    const int d = choose_d(z);

    std::map<std::string, double> seen;
    ArimaFit best;
    best.aicc = std::numeric_limits<double>::infinity();

    // all candidates share one conditioning offset so AICc values compare on
    // an identical effective sample
    const int common_ncond = 5 + (use_seasonal ? period : 0);

    auto try_order = [&](int p, int q, int sp, int sq, bool constant) {
        if (p < 0 || q < 0 || p > 5 || q > 5 || sp < 0 || sq < 0 || sp > 1 || sq > 1) return;
        if (!use_seasonal && (sp > 0 || sq > 0)) return;
        if (d + D >= 2 && constant) return;
        ArimaOrder o;
        o.p = p;
        o.d = d;
        o.q = q;
        o.sp = sp;
        o.sd = D;
        o.sq = sq;
        o.period = use_seasonal ? period : 1;
        o.constant = constant;
        const std::string key = o.label();
        if (seen.count(key)) return;
        ArimaFit fit = fit_arima(y, o, common_ncond);
        seen[key] = fit.ok ? fit.aicc : std::numeric_limits<double>::infinity();
        if (fit.ok && fit.aicc < best.aicc) best = std::move(fit);
    };

    const bool c0 = d + D < 2;
    // Hyndman-Khandakar starting set
    try_order(2, 2, use_seasonal ? 1 : 0, use_seasonal ? 1 : 0, c0);
    try_order(0, 0, 0, 0, c0);
    try_order(1, 0, use_seasonal ? 1 : 0, 0, c0);
    try_order(0, 1, 0, use_seasonal ? 1 : 0, c0);

    // stepwise neighbourhood walk
    for (int round = 0; round < 24 && best.ok; ++round) {
        const ArimaOrder cur = best.order;
        const double incumbent = best.aicc;
        const int deltas[2] = {-1, 1};
        for (int dd : deltas) {
            try_order(cur.p + dd, cur.q, cur.sp, cur.sq, cur.constant);
            try_order(cur.p, cur.q + dd, cur.sp, cur.sq, cur.constant);
            try_order(cur.p + dd, cur.q + dd, cur.sp, cur.sq, cur.constant);
            if (use_seasonal) {
                try_order(cur.p, cur.q, cur.sp + dd, cur.sq, cur.constant);
                try_order(cur.p, cur.q, cur.sp, cur.sq + dd, cur.constant);
            }
        }
        if (d + D < 2) try_order(cur.p, cur.q, cur.sp, cur.sq, !cur.constant);
        if (best.aicc >= incumbent) break;
    }

    if (best.ok) {
        // refit the winner with its natural conditioning to use the full sample
        ArimaFit refit = fit_arima(y, best.order);
        if (refit.ok) best = std::move(refit);
    } else {
        // minimal fallback inside the contract: difference-stationary mean model
        ArimaOrder o;
        o.d = std::min(d, 1);
        o.period = 1;
        o.constant = o.d == 0;
        best = fit_arima(y, o);
        if (!best.ok) throw util::DataError("arima estimation failed");
    }

    AutoArima out;
    out.forecast = arima_forecast(best, y, horizon);
    out.fit = std::move(best);
    for (double v : out.forecast) {
        if (!std::isfinite(v)) throw util::DataError("arima produced a non-finite forecast");
    }
    return out;
}

} // namespace metafor::models
