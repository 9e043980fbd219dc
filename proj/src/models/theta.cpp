#include "metafor/models/theta.hpp"
#include "metafor/models/decompose.hpp"
#include "metafor/models/smoothing.hpp"
#include "metafor/util/errors.hpp"

#include <cstddef>

namespace metafor::models {

namespace {

double ols_slope(const std::vector<double>& y) {
    const std::size_t n = y.size();
    const double tbar = 0.5 * static_cast<double>(n - 1);
    double ybar = 0.0;
    for (double v : y) ybar += v;
    ybar /= static_cast<double>(n);
    double num = 0.0, den = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        const double dt = static_cast<double>(t) - tbar;
        num += dt * (y[t] - ybar);
        den += dt * dt;
    }
    return den == 0.0 ? 0.0 : num / den;
}

} // namespace

std::vector<double> theta_forecast(const std::vector<double>& train, int period, int horizon) {
    if (train.size() < 4) throw util::DataError("theta needs at least 4 observations");
    const SeasonalAdjustment adj = seasonal_adjustment(train, period);
    const SmoothingFit base = ses(adj.adjusted, horizon);
    const double slope = ols_slope(adj.adjusted);
    std::vector<double> f = base.forecast;
    for (int k = 1; k <= horizon; ++k) f[static_cast<std::size_t>(k - 1)] += 0.5 * slope * k;
    return adj.reseasonalize(f);
}

std::vector<double> comb_forecast(const std::vector<double>& train, int period, int horizon) {
    if (train.size() < 4) throw util::DataError("comb needs at least 4 observations");
    const SeasonalAdjustment adj = seasonal_adjustment(train, period);
    const SmoothingFit a = ses(adj.adjusted, horizon);
    const SmoothingFit b = holt(adj.adjusted, horizon);
    const SmoothingFit c = damped_holt(adj.adjusted, horizon);
    std::vector<double> f(static_cast<std::size_t>(horizon));
    for (std::size_t k = 0; k < f.size(); ++k) {
        f[k] = (a.forecast[k] + b.forecast[k] + c.forecast[k]) / 3.0;
    }
    return adj.reseasonalize(f);
}

} // namespace metafor::models
