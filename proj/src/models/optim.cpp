#include "metafor/models/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace metafor::models {

namespace {

void clamp_point(std::vector<double>& x, const std::vector<double>& lo, const std::vector<double>& hi) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], lo[i], hi[i]);
}

} // namespace

std::vector<double> nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                std::vector<double> x0,
                                const std::vector<double>& lo,
                                const std::vector<double>& hi,
                                int max_iter,
                                double tol) {
    const std::size_t d = x0.size();
    if (d == 0) return x0;
    if (max_iter <= 0) max_iter = 200 * static_cast<int>(d);
    clamp_point(x0, lo, hi);

    struct Vertex {
        std::vector<double> x;
        double value;
    };
    auto eval = [&](std::vector<double> x) {
        clamp_point(x, lo, hi);
        double v = f(x);
        if (!std::isfinite(v)) v = std::numeric_limits<double>::max();
        return Vertex{std::move(x), v};
    };

    std::vector<Vertex> simplex;
    simplex.reserve(d + 1);
    simplex.push_back(eval(x0));
    for (std::size_t i = 0; i < d; ++i) {
        auto x = x0;
        const double span = hi[i] - lo[i];
        double step = 0.1 * span;
        if (step == 0.0) step = 0.05;
        if (x[i] + step > hi[i]) step = -step;
        x[i] += step;
        simplex.push_back(eval(std::move(x)));
    }
    auto by_value = [](const Vertex& a, const Vertex& b) { return a.value < b.value; };
    std::sort(simplex.begin(), simplex.end(), by_value);

    for (int iter = 0; iter < max_iter; ++iter) {
        if (std::fabs(simplex.back().value - simplex.front().value) <=
            tol * (std::fabs(simplex.front().value) + tol)) {
            break;
        }
        std::vector<double> centroid(d, 0.0);
        for (std::size_t v = 0; v < d; ++v) {
            for (std::size_t i = 0; i < d; ++i) centroid[i] += simplex[v].x[i];
        }
        for (auto& c : centroid) c /= static_cast<double>(d);

        auto blend = [&](double coef) {
            std::vector<double> x(d);
            for (std::size_t i = 0; i < d; ++i) {
                x[i] = centroid[i] + coef * (centroid[i] - simplex.back().x[i]);
            }
            return eval(std::move(x));
        };

        Vertex reflected = blend(1.0);
        if (reflected.value < simplex.front().value) {
            Vertex expanded = blend(2.0);
            simplex.back() = expanded.value < reflected.value ? std::move(expanded) : std::move(reflected);
        } else if (reflected.value < simplex[d - 1].value) {
            simplex.back() = std::move(reflected);
        } else {
            Vertex contracted = blend(-0.5);
            if (contracted.value < simplex.back().value) {
                simplex.back() = std::move(contracted);
            } else {
                // shrink toward the best vertex
                for (std::size_t v = 1; v <= d; ++v) {
                    std::vector<double> x(d);
                    for (std::size_t i = 0; i < d; ++i) {
                        x[i] = simplex[0].x[i] + 0.5 * (simplex[v].x[i] - simplex[0].x[i]);
                    }
                    simplex[v] = eval(std::move(x));
                }
            }
        }
        std::sort(simplex.begin(), simplex.end(), by_value);
    }
    return simplex.front().x;
}

double minimize_scalar(const std::function<double(double)>& f, double lo, double hi,
                       int grid, int refine_iter) {
    double best_x = lo;
    double best_v = std::numeric_limits<double>::max();
    for (int i = 0; i <= grid; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid);
        const double v = f(x);
        if (std::isfinite(v) && v < best_v) {
            best_v = v;
            best_x = x;
        }
    }
    const double half = (hi - lo) / static_cast<double>(grid);
    double a = std::max(lo, best_x - half);
    double b = std::min(hi, best_x + half);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int i = 0; i < refine_iter; ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    const double mid = 0.5 * (a + b);
    return f(mid) <= std::min(f1, f2) ? mid : (f1 < f2 ? x1 : x2);
}

} // namespace metafor::models
