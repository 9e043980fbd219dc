#include "metafor/models/trend.hpp"
#include "metafor/util/errors.hpp"
#include "metafor/util/linalg.hpp"

#include <cmath>

namespace metafor::models {

namespace {

// Time index is centered and scaled for conditioning; forecasts use the same
// affine map extended past the sample.
std::vector<double> poly_seasonal_forecast(const std::vector<double>& y, int degree, int period,
                                           int horizon) {
    const std::size_t n = y.size();
    const std::size_t m = period >= 2 ? static_cast<std::size_t>(period) : 0;
    const std::size_t params = static_cast<std::size_t>(degree) + 1 + (m > 0 ? m - 1 : 0);
    if (n < params + 2) throw util::DataError("trend regression needs more observations");

    const double center = 0.5 * static_cast<double>(n - 1);
    const double scale = n > 1 ? 0.5 * static_cast<double>(n - 1) : 1.0;
    auto tval = [&](std::size_t t) { return (static_cast<double>(t) - center) / scale; };

    std::vector<std::vector<double>> cols(params, std::vector<double>(n, 0.0));
    for (std::size_t t = 0; t < n; ++t) {
        double u = 1.0;
        for (int d = 0; d <= degree; ++d) {
            cols[static_cast<std::size_t>(d)][t] = u;
            u *= tval(t);
        }
        if (m > 0) {
            const std::size_t pos = t % m;
            if (pos > 0) cols[static_cast<std::size_t>(degree) + pos][t] = 1.0;
        }
    }
    std::vector<double> beta;
    if (!util::ols(cols, y, beta)) throw util::DataError("singular trend regression");

    std::vector<double> out(static_cast<std::size_t>(horizon));
    for (int k = 1; k <= horizon; ++k) {
        const std::size_t t = n + static_cast<std::size_t>(k - 1);
        double pred = 0.0;
        double u = 1.0;
        for (int d = 0; d <= degree; ++d) {
            pred += beta[static_cast<std::size_t>(d)] * u;
            u *= tval(t);
        }
        if (m > 0) {
            const std::size_t pos = t % m;
            if (pos > 0) pred += beta[static_cast<std::size_t>(degree) + pos];
        }
        out[static_cast<std::size_t>(k - 1)] = pred;
    }
    return out;
}

} // namespace

std::vector<double> linear_trend_forecast(const std::vector<double>& train, int horizon) {
    return poly_seasonal_forecast(train, 1, 0, horizon);
}

std::vector<double> quadratic_trend_forecast(const std::vector<double>& train, int horizon) {
    return poly_seasonal_forecast(train, 2, 0, horizon);
}

std::vector<double> linear_trend_seasonal_forecast(const std::vector<double>& train, int period,
                                                   int horizon) {
    return poly_seasonal_forecast(train, 1, period, horizon);
}

std::vector<double> quadratic_trend_seasonal_forecast(const std::vector<double>& train, int period,
                                                      int horizon) {
    return poly_seasonal_forecast(train, 2, period, horizon);
}

} // namespace metafor::models
