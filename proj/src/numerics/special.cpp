#include "nse/numerics/special.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>

#include "nse/errors.hpp"

namespace nse::numerics {

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("log_gamma: argument must be positive and finite");
    return boost::math::lgamma(x);
}

double zeta(double s) {
    if (!(s > 1.0)) throw DomainError("zeta: requires s > 1");
    constexpr int terms = 50;
    double sum = 0.0;
    for (int n = terms - 1; n >= 1; --n) sum += std::pow(static_cast<double>(n), -s);
    const double big_n = terms;
    const double tail_head = std::pow(big_n, -s);
    // Euler-Maclaurin: integral + half endpoint + B2 and B4 corrections.
    sum += big_n * tail_head / (s - 1.0);
    sum += 0.5 * tail_head;
    sum += s * tail_head / (12.0 * big_n);
    sum -= s * (s + 1.0) * (s + 2.0) * tail_head / (720.0 * big_n * big_n * big_n);
    return sum;
}

double ei_paper(double y) {
    if (!(y > 0.0)) throw DomainError("ei_paper: requires y > 0 (logarithmic divergence at 0)");
    if (y > 700.0) return 0.0;
    return -std::expint(-y);
}

double unit_sphere_area(int dimension) {
    if (dimension < 1) throw DomainError("unit_sphere_area: dimension must be >= 1");
    if (dimension == 1) return 2.0;
    const double half = 0.5 * dimension;
    return 2.0 * std::exp(half * std::log(std::numbers::pi) - log_gamma(half));
}

}  // namespace nse::numerics
