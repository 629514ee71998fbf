#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace nse::numerics {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::size_t evaluations = 0;
};

struct QuadratureOptions {
    double rel_tol = 1e-10;
    /// Absolute floor on the accepted error; useful when the integral is ~0.
    double abs_tol = 0.0;
    /// Bisection depth of the 15-point Gauss-Kronrod recursion. The number of
    /// integrand evaluations is bounded by 15 * (2^(max_depth+1) - 1).
    unsigned max_depth = 15;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod integral of f over [lo, hi]. `hi` may be +infinity,
/// in which case the substitution u = lo + t/(1-t), t in [0, 1) is applied.
///
/// Throws DomainError when lo >= hi, rel_tol is outside (0, 1), or f returns a
/// non-finite sample; throws ConvergenceError (carrying the best estimate) when
/// the error estimate stays above max(rel_tol*|value|, abs_tol).
QuadratureResult integrate_adaptive(const Integrand& f, double lo, double hi, double rel_tol);
QuadratureResult integrate_adaptive(const Integrand& f, double lo, double hi,
                                    const QuadratureOptions& options);

/// Sum of adaptive integrals over consecutive breakpoints [b0,b1], [b1,b2], ...
/// The last breakpoint may be +infinity. Narrow features near a breakpoint are
/// resolved much more reliably than with one integral over the whole range.
QuadratureResult integrate_piecewise(const Integrand& f, std::span<const double> breakpoints,
                                     const QuadratureOptions& options);

/// Upper bound on integrand evaluations permitted by `options`.
std::size_t evaluation_budget(const QuadratureOptions& options);

}  // namespace nse::numerics
