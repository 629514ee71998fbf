#pragma once

#include <functional>

namespace nse::numerics {

/// Bisection inverse of a strictly decreasing f on [lo, hi]: returns x with
/// f(x) = target, |x - x*| <= tol. Throws BracketError when target lies outside
/// [f(hi), f(lo)].
double invert_monotone(const std::function<double(double)>& f, double target, double lo, double hi,
                       double tol);

}  // namespace nse::numerics
