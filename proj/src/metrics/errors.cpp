#include "metafor/metrics/errors.hpp"
#include "metafor/util/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace metafor::metrics {

int mase_lag(core::Frequency f) {
    return f == core::Frequency::Monthly ? 12 : 1;
}

ErrorVector compute_errors(const std::vector<double>& actual,
                           const std::vector<double>& forecast,
                           const std::vector<double>& train,
                           int lag) {
    if (actual.empty() || actual.size() != forecast.size()) {
        throw util::DataError("actual and forecast must have equal positive length");
    }
    const std::size_t h = actual.size();
    const double nan = std::numeric_limits<double>::quiet_NaN();

    double sum_sq = 0.0, sum_abs = 0.0, sum_smape = 0.0, sum_maape = 0.0;
    std::vector<double> abs_errors(h);
    for (std::size_t t = 0; t < h; ++t) {
        const double a = actual[t];
        const double f = forecast[t];
        const double e = f - a;
        sum_sq += e * e;
        abs_errors[t] = std::fabs(e);
        sum_abs += abs_errors[t];

        const double denom = std::fabs(a) + std::fabs(f);
        sum_smape += denom == 0.0 ? 0.0 : std::fabs(f - a) / denom;

        if (a == 0.0) {
            sum_maape += f == 0.0 ? 0.0 : std::asin(1.0); // pi/2
        } else {
            sum_maape += std::atan(std::fabs((a - f) / a));
        }
    }

    ErrorVector ev;
    ev.rmse = std::sqrt(sum_sq / static_cast<double>(h));
    ev.mae = sum_abs / static_cast<double>(h);
    std::sort(abs_errors.begin(), abs_errors.end());
    ev.mdae = h % 2 == 1 ? abs_errors[h / 2] : 0.5 * (abs_errors[h / 2 - 1] + abs_errors[h / 2]);
    ev.smape = 200.0 / static_cast<double>(h) * sum_smape;
    ev.maape = 100.0 / static_cast<double>(h) * sum_maape;

    const std::size_t m = static_cast<std::size_t>(lag);
    if (lag < 1 || train.size() < m + 1) {
        ev.mase = nan;
        return ev;
    }
    double scale = 0.0;
    for (std::size_t t = m; t < train.size(); ++t) scale += std::fabs(train[t] - train[t - m]);
    scale /= static_cast<double>(train.size() - m);
    ev.mase = scale == 0.0 ? nan : ev.mae / scale;
    return ev;
}

} // namespace metafor::metrics
