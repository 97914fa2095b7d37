#pragma once

#include <vector>

#include "hpcproj/errors.hpp"

namespace hpcproj {

struct nnls_result {
    std::vector<double> coeffs;
    double residual_norm = 0.0;  // Euclidean norm of A x - b
};

/// Nonnegative least squares: minimize |A x - b| subject to x >= 0
/// (Lawson-Hanson active set). rows[i] is one row of A.
nnls_result nnls(const std::vector<std::vector<double>>& rows,
                 const std::vector<double>& rhs);

struct affine_fit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual_norm = 0.0;
};

/// Unconstrained least squares for y = slope * x (+ intercept when
/// with_intercept). Throws fit_error on degenerate systems.
affine_fit fit_linear(const std::vector<double>& x,
                      const std::vector<double>& y, bool with_intercept);

/// Least squares for y = u * x + s * c with a fixed second regressor c
/// (the idle-weighted form used by the energy fits).
affine_fit fit_scaled_intercept(const std::vector<double>& x,
                                const std::vector<double>& y, double c);

} // namespace hpcproj
