#pragma once

#include <functional>

namespace bzeta {

struct QuadratureResult {
    double estimate = 0.0;
    double est_error = 0.0;  // internal absolute-error estimate
    long evaluations = 0;
    bool converged = false;
};

/// Adaptive integration of f over [0, inf). The interval is split at
/// x = 1; the substitution x = u^2 removes a x^{-1/2} endpoint
/// singularity on [0, 1], and x = 1/t maps the tail onto (0, 1]. Each
/// piece goes through a globally adaptive Gauss-Kronrod 7-15 subdivision
/// driven by the embedded error estimate, refining the worst panel first.
///
/// converged is false when the error estimate is still above tol after
/// the evaluation budget; estimate and est_error are reported either way.
QuadratureResult integrate_zero_to_inf(const std::function<double(double)>& f, double tol,
                                       long max_evaluations = 1'000'000);

}  // namespace bzeta
