#pragma once

#include <string>
#include <vector>

namespace metafor::models {

struct ArimaOrder {
    int p = 0, d = 0, q = 0;
    int sp = 0, sd = 0, sq = 0; // seasonal orders at the given period
    int period = 1;
    bool constant = false;

    std::string label() const;
};

// Conditional-sum-of-squares fit with expanded (multiplicative) seasonal
// polynomials. Coefficients are kept in the expanded lag representation.
struct ArimaFit {
    ArimaOrder order;
    std::vector<double> ar; // lags 1..p + period*sp
    std::vector<double> ma; // lags 1..q + period*sq
    double mu = 0.0;
    double sse = 0.0;
    std::size_t n_eff = 0;
    double aicc = 0.0;
    bool ok = false;
};

// ncond_override forces a fixed conditioning offset so that candidates with
// different AR orders are scored on the same effective sample during model
// selection; -1 uses the model's natural offset.
ArimaFit fit_arima(const std::vector<double>& y, const ArimaOrder& order, int ncond_override = -1);

std::vector<double> arima_forecast(const ArimaFit& fit, const std::vector<double>& y, int horizon);

// Automatic selection: differencing by repeated KPSS, seasonal differencing
// by a 0.64 seasonal-strength threshold, stepwise AICc search over p,q <= 5
// (seasonal orders <= 1).
struct AutoArima {
    ArimaFit fit;
    std::vector<double> forecast;
};

AutoArima auto_arima(const std::vector<double>& y, int period, bool seasonal, int horizon);

} // namespace metafor::models
