#pragma once

#include <vector>

namespace metafor::util {

// Solves A x = b for small dense systems by Gaussian elimination with
// partial pivoting. Returns false when A is singular to working precision.
bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double>& x);

// Least squares fit of y on the given column vectors (including intercept if
// wanted). Returns the coefficient vector; false on a singular system.
bool ols(const std::vector<std::vector<double>>& columns, const std::vector<double>& y,
         std::vector<double>& beta);

// Eigen-decomposition of a symmetric matrix by cyclic Jacobi sweeps.
// Eigenvalues are returned descending with matching eigenvectors as rows.
void symmetric_eigen(std::vector<std::vector<double>> a,
                     std::vector<double>& eigenvalues,
                     std::vector<std::vector<double>>& eigenvectors);

} // namespace metafor::util
