#pragma once

#include <functional>
#include <vector>

namespace metafor::models {

// Derivative-free Nelder-Mead minimizer. Box constraints are enforced by
// clamping candidate points; deterministic for fixed inputs.
std::vector<double> nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                std::vector<double> x0,
                                const std::vector<double>& lo,
                                const std::vector<double>& hi,
                                int max_iter = 0,
                                double tol = 1e-8);

// One-dimensional minimization: coarse grid then golden-section refinement.
double minimize_scalar(const std::function<double(double)>& f, double lo, double hi,
                       int grid = 20, int refine_iter = 60);

} // namespace metafor::models
