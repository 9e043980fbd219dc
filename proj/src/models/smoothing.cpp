#include "metafor/models/smoothing.hpp"
#include "metafor/models/decompose.hpp"
#include "metafor/models/optim.hpp"
#include "metafor/util/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace metafor::models {

namespace {

constexpr double kAlphaLo = 1e-4;
constexpr double kAlphaHi = 0.9999;
constexpr double kPhiLo = 0.8;
constexpr double kPhiHi = 0.98;

// Gaussian log-likelihood from the one-step SSE; a small variance floor keeps
// degenerate (perfect) fits comparable by parameter count.
double sse_aicc(double sse, std::size_t n, int k, double scale_hint) {
    const double floor_var = 1e-12 * (1.0 + scale_hint);
    const double sigma2 = std::max(sse / static_cast<double>(n), floor_var);
    const double loglik = -0.5 * static_cast<double>(n) * (std::log(2.0 * M_PI * sigma2) + 1.0);
    const double kk = static_cast<double>(k);
    double aicc = -2.0 * loglik + 2.0 * kk;
    if (static_cast<double>(n) > kk + 1.0) {
        aicc += 2.0 * kk * (kk + 1.0) / (static_cast<double>(n) - kk - 1.0);
    } else {
        aicc = std::numeric_limits<double>::infinity();
    }
    return aicc;
}

double mean_sq(const std::vector<double>& y) {
    double s = 0.0;
    for (double v : y) s += v * v;
    return y.empty() ? 0.0 : s / static_cast<double>(y.size());
}

} // namespace

SmoothingFit ses(const std::vector<double>& y, int horizon) {
    if (y.size() < 2) throw util::DataError("ses needs at least 2 observations");
    auto sse_at = [&](double alpha) {
        double level = y[0];
        double sse = 0.0;
        for (std::size_t t = 1; t < y.size(); ++t) {
            const double e = y[t] - level;
            sse += e * e;
            level += alpha * e;
        }
        return sse;
    };
    const double alpha = minimize_scalar(sse_at, kAlphaLo, kAlphaHi);
    double level = y[0];
    for (std::size_t t = 1; t < y.size(); ++t) level += alpha * (y[t] - level);

    SmoothingFit fit;
    fit.name = "SES";
    fit.params = {alpha};
    fit.sse = sse_at(alpha);
    fit.n_errors = y.size() - 1;
    fit.k = 2; // alpha + initial level
    fit.aicc = sse_aicc(fit.sse, fit.n_errors, fit.k, mean_sq(y));
    fit.forecast.assign(static_cast<std::size_t>(horizon), level);
    return fit;
}

namespace {

double holt_sse(const std::vector<double>& y, double alpha, double beta, double phi,
                double* out_level = nullptr, double* out_trend = nullptr) {
    double level = y[0];
    double trend = y[1] - y[0];
    double sse = 0.0;
    for (std::size_t t = 1; t < y.size(); ++t) {
        const double pred = level + phi * trend;
        const double e = y[t] - pred;
        sse += e * e;
        const double new_level = alpha * y[t] + (1.0 - alpha) * pred;
        trend = beta * (new_level - level) + (1.0 - beta) * phi * trend;
        level = new_level;
    }
    if (out_level) *out_level = level;
    if (out_trend) *out_trend = trend;
    return sse;
}

} // namespace

SmoothingFit holt(const std::vector<double>& y, int horizon) {
    if (y.size() < 3) throw util::DataError("holt needs at least 3 observations");
    auto obj = [&](const std::vector<double>& p) { return holt_sse(y, p[0], p[1], 1.0); };
    const auto p = nelder_mead(obj, {0.5, 0.1}, {kAlphaLo, kAlphaLo}, {kAlphaHi, kAlphaHi});
    double level, trend;
    SmoothingFit fit;
    fit.name = "Holt";
    fit.sse = holt_sse(y, p[0], p[1], 1.0, &level, &trend);
    fit.params = p;
    fit.n_errors = y.size() - 1;
    fit.k = 4;
    fit.aicc = sse_aicc(fit.sse, fit.n_errors, fit.k, mean_sq(y));
    fit.forecast.resize(static_cast<std::size_t>(horizon));
    for (int i = 1; i <= horizon; ++i) fit.forecast[static_cast<std::size_t>(i - 1)] = level + i * trend;
    return fit;
}

SmoothingFit damped_holt(const std::vector<double>& y, int horizon) {
    if (y.size() < 3) throw util::DataError("damped holt needs at least 3 observations");
    auto obj = [&](const std::vector<double>& p) { return holt_sse(y, p[0], p[1], p[2]); };
    const auto p = nelder_mead(obj, {0.5, 0.1, 0.9}, {kAlphaLo, kAlphaLo, kPhiLo},
                               {kAlphaHi, kAlphaHi, kPhiHi});
    double level, trend;
    SmoothingFit fit;
    fit.name = "DampedHolt";
    fit.sse = holt_sse(y, p[0], p[1], p[2], &level, &trend);
    fit.params = p;
    fit.n_errors = y.size() - 1;
    fit.k = 5;
    fit.aicc = sse_aicc(fit.sse, fit.n_errors, fit.k, mean_sq(y));
    fit.forecast.resize(static_cast<std::size_t>(horizon));
    double damp = 0.0;
    for (int i = 1; i <= horizon; ++i) {
        damp += std::pow(p[2], i);
        fit.forecast[static_cast<std::size_t>(i - 1)] = level + damp * trend;
    }
    return fit;
}

namespace {

struct HwState {
    double level = 0.0;
    double trend = 0.0;
    std::vector<double> seasonal;
};

double hw_sse(const std::vector<double>& y, int period, double alpha, double beta, double gamma,
              const HwState& init, HwState* out = nullptr) {
    const std::size_t m = static_cast<std::size_t>(period);
    HwState st = init;
    double sse = 0.0;
    for (std::size_t t = 0; t < y.size(); ++t) {
        const double s = st.seasonal[t % m];
        const double pred = st.level + st.trend + s;
        const double e = y[t] - pred;
        sse += e * e;
        const double new_level = alpha * (y[t] - s) + (1.0 - alpha) * (st.level + st.trend);
        st.trend = beta * (new_level - st.level) + (1.0 - beta) * st.trend;
        st.seasonal[t % m] = gamma * (y[t] - new_level) + (1.0 - gamma) * s;
        st.level = new_level;
    }
    if (out) *out = st;
    return sse;
}

} // namespace

SmoothingFit holt_winters_additive(const std::vector<double>& y, int period, int horizon) {
    const std::size_t m = static_cast<std::size_t>(period);
    if (period < 2 || y.size() < 2 * m) throw util::DataError("holt-winters needs two full periods");

    Decomposition d = classical_decomposition(y, period, false);
    HwState init;
    init.seasonal = d.indices;
    double first = 0.0, second = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        first += y[i] - init.seasonal[i % m];
        second += y[m + i] - init.seasonal[(m + i) % m];
    }
    first /= static_cast<double>(m);
    second /= static_cast<double>(m);
    init.trend = (second - first) / static_cast<double>(m);
    // back-date the level so the first one-step prediction lands on y[0]
    init.level = first - init.trend * 0.5 * static_cast<double>(m + 1);

    auto obj = [&](const std::vector<double>& p) { return hw_sse(y, period, p[0], p[1], p[2], init); };
    const auto p = nelder_mead(obj, {0.3, 0.05, 0.1}, {kAlphaLo, kAlphaLo, kAlphaLo},
                               {kAlphaHi, kAlphaHi, kAlphaHi});
    HwState st;
    SmoothingFit fit;
    fit.name = "HoltWintersAdd";
    fit.sse = hw_sse(y, period, p[0], p[1], p[2], init, &st);
    fit.params = p;
    fit.n_errors = y.size();
    fit.k = 3 + 2 + period;
    fit.aicc = sse_aicc(fit.sse, fit.n_errors, fit.k, mean_sq(y));
    fit.forecast.resize(static_cast<std::size_t>(horizon));
    for (int i = 1; i <= horizon; ++i) {
        const std::size_t pos = (y.size() + static_cast<std::size_t>(i - 1)) % m;
        fit.forecast[static_cast<std::size_t>(i - 1)] = st.level + i * st.trend + st.seasonal[pos];
    }
    return fit;
}

SmoothingFit ets_family(const std::vector<double>& y, int period, int horizon, bool allow_seasonal) {
    std::vector<SmoothingFit> fits;
    fits.push_back(ses(y, horizon));
    if (y.size() >= 3) {
        fits.push_back(holt(y, horizon));
        fits.push_back(damped_holt(y, horizon));
    }
    if (allow_seasonal && period >= 2 && y.size() >= 2 * static_cast<std::size_t>(period) + 4) {
        fits.push_back(holt_winters_additive(y, period, horizon));
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < fits.size(); ++i) {
        if (fits[i].aicc < fits[best].aicc) best = i;
    }
    return fits[best];
}

} // namespace metafor::models
