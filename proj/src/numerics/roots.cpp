#include "nse/numerics/roots.hpp"

#include <cmath>
#include <sstream>

#include "nse/errors.hpp"

namespace nse::numerics {

double invert_monotone(const std::function<double(double)>& f, double target, double lo, double hi,
                       double tol) {
    if (!(tol > 0.0)) throw DomainError("invert_monotone: tol must be positive");
    if (!(lo <= hi)) throw DomainError("invert_monotone: need lo <= hi");
    const double f_lo = f(lo);
    const double f_hi = f(hi);
    if (!(f_lo >= target && target >= f_hi)) {
        std::ostringstream msg;
        msg << "invert_monotone: target " << target << " outside [" << f_hi << ", " << f_lo << "]";
        throw BracketError(msg.str());
    }
    if (f_lo == target) return lo;
    if (f_hi == target) return hi;

    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (f(mid) >= target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace nse::numerics
