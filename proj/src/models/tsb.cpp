#include "metafor/models/tsb.hpp"
#include "metafor/util/errors.hpp"

#include <cmath>
#include <limits>

namespace metafor::models {

namespace {

struct TsbState {
    double prob = 0.0;
    double size = 0.0;
};

double tsb_mse(const std::vector<double>& y, double alpha, double beta, TsbState init,
               TsbState* out = nullptr) {
    TsbState st = init;
    double sse = 0.0;
    for (double v : y) {
        const double pred = st.prob * st.size;
        const double e = v - pred;
        sse += e * e;
        const double demand = v != 0.0 ? 1.0 : 0.0;
        st.prob += alpha * (demand - st.prob);
        if (demand > 0.0) st.size += beta * (v - st.size);
    }
    if (out) *out = st;
    return sse / static_cast<double>(y.size());
}

} // namespace

std::vector<double> tsb_forecast(const std::vector<double>& train, int horizon) {
    if (train.size() < 4) throw util::DataError("tsb needs at least 4 observations");

    TsbState init;
    int positive = 0;
    double pos_sum = 0.0;
    for (double v : train) {
        if (v != 0.0) {
            ++positive;
            pos_sum += v;
        }
    }
    if (positive == 0) return std::vector<double>(static_cast<std::size_t>(horizon), 0.0);
    init.prob = static_cast<double>(positive) / static_cast<double>(train.size());
    init.size = pos_sum / positive;

    // smoothing pair on {0.01..0.5}
    double best_a = 0.01, best_b = 0.01;
    double best = std::numeric_limits<double>::max();
    for (int i = 0; i <= 10; ++i) {
        for (int j = 0; j <= 10; ++j) {
            const double a = i == 0 ? 0.01 : 0.05 * i;
            const double b = j == 0 ? 0.01 : 0.05 * j;
            const double mse = tsb_mse(train, a, b, init);
            if (mse < best) {
                best = mse;
                best_a = a;
                best_b = b;
            }
        }
    }
    TsbState st;
    tsb_mse(train, best_a, best_b, init, &st);
    return std::vector<double>(static_cast<std::size_t>(horizon), st.prob * st.size);
}

} // namespace metafor::models
