#include "nse/numerics/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include "nse/errors.hpp"

namespace nse::numerics {

namespace {

struct Panel {
    double lo = 0.0;
    double hi = 0.0;
    double value = 0.0;
    double error = 0.0;
    double l1 = 0.0;
};

bool operator<(const Panel& a, const Panel& b) { return a.error < b.error; }

/// Counts evaluations and rejects non-finite samples.
class Sampler {
public:
    Sampler(const Integrand& f, double lo, bool infinite) : f_(f), lo_(lo), infinite_(infinite) {}

    double operator()(double x) {
        double y = 0.0;
        if (infinite_) {
            // u = lo + t/(1-t), du = dt/(1-t)^2.
            const double s = 1.0 - x;
            if (s <= 0.0) return 0.0;
            y = sample(lo_ + x / s) / (s * s);
        } else {
            y = sample(x);
        }
        return y;
    }

    std::size_t evaluations = 0;

private:
    double sample(double x) {
        ++evaluations;
        const double y = f_(x);
        if (!std::isfinite(y)) {
            std::ostringstream msg;
            msg << "integrand is not finite at x = " << x;
            throw DomainError(msg.str());
        }
        return y;
    }

    const Integrand& f_;
    double lo_;
    bool infinite_;
};

/// 15-point Kronrod rule with the embedded 7-point Gauss rule (nodes and
/// weights from Boost.Math); the error is |K15 - G7| on the panel's own scale.
Panel kronrod_panel(Sampler& f, double lo, double hi) {
    using boost::math::quadrature::gauss;
    using boost::math::quadrature::gauss_kronrod;
    static const auto& xk = gauss_kronrod<double, 15>::abscissa();
    static const auto& wk = gauss_kronrod<double, 15>::weights();
    static const auto& wg = gauss<double, 7>::weights();

    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double f0 = f(mid);
    double kronrod = wk[0] * f0;
    double gauss_sum = wg[0] * f0;
    double l1 = wk[0] * std::abs(f0);
    for (std::size_t i = 1; i < xk.size(); ++i) {
        const double fl = f(mid - half * xk[i]);
        const double fr = f(mid + half * xk[i]);
        kronrod += wk[i] * (fl + fr);
        l1 += wk[i] * (std::abs(fl) + std::abs(fr));
        if (i % 2 == 0) gauss_sum += wg[i / 2] * (fl + fr);
    }
    Panel p;
    p.lo = lo;
    p.hi = hi;
    p.value = kronrod * half;
    p.error = std::abs(kronrod - gauss_sum) * half;
    p.l1 = l1 * half;
    return p;
}

}  // namespace

std::size_t evaluation_budget(const QuadratureOptions& options) {
    return 15u * ((std::size_t{1} << (options.max_depth + 1)) - 1u);
}

QuadratureResult integrate_adaptive(const Integrand& f, double lo, double hi, double rel_tol) {
    QuadratureOptions options;
    options.rel_tol = rel_tol;
    return integrate_adaptive(f, lo, hi, options);
}

QuadratureResult integrate_adaptive(const Integrand& f, double lo, double hi,
                                    const QuadratureOptions& options) {
    if (!(options.rel_tol > 0.0 && options.rel_tol < 1.0))
        throw DomainError("integrate_adaptive: rel_tol must lie in (0, 1)");
    if (!std::isfinite(lo) || std::isnan(hi) || !(lo < hi))
        throw DomainError("integrate_adaptive: need finite lo < hi");

    const bool infinite = std::isinf(hi);
    Sampler sampler(f, lo, infinite);
    const double a = infinite ? 0.0 : lo;
    const double b = infinite ? 1.0 : hi;
    const std::size_t budget = evaluation_budget(options);

    // Globally adaptive bisection: always split the panel with the largest error.
    std::priority_queue<Panel> panels;
    panels.push(kronrod_panel(sampler, a, b));
    double value = panels.top().value;
    double error = panels.top().error;
    double l1 = panels.top().l1;
    const auto accepted = [&]() {
        // Kronrod-vs-Gauss differences sit at round-off level once the integrand is
        // resolved; allow a few ulps of the L1 norm on top of the requested tolerance.
        const double roundoff = 64.0 * std::numeric_limits<double>::epsilon() * l1;
        return std::max({options.rel_tol * std::abs(value), options.abs_tol, roundoff});
    };
    while (error > accepted() && sampler.evaluations + 30 <= budget) {
        const Panel worst = panels.top();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) break;
        panels.pop();
        const Panel left = kronrod_panel(sampler, worst.lo, mid);
        const Panel right = kronrod_panel(sampler, mid, worst.hi);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        l1 += left.l1 + right.l1 - worst.l1;
        panels.push(left);
        panels.push(right);
    }
    // Re-sum to shed the drift of the running updates.
    value = 0.0;
    error = 0.0;
    l1 = 0.0;
    for (auto copy = panels; !copy.empty(); copy.pop()) {
        value += copy.top().value;
        error += copy.top().error;
        l1 += copy.top().l1;
    }

    QuadratureResult result;
    result.value = value;
    result.abs_error_estimate = error;
    result.evaluations = sampler.evaluations;
    if (error > accepted()) {
        std::ostringstream msg;
        msg << "integrate_adaptive: no convergence on [" << lo << ", " << hi << "] after "
            << result.evaluations << " evaluations (estimate " << result.value << ", error "
            << result.abs_error_estimate << ")";
        throw ConvergenceError(msg.str(), result.value, result.abs_error_estimate);
    }
    return result;
}

QuadratureResult integrate_piecewise(const Integrand& f, std::span<const double> breakpoints,
                                     const QuadratureOptions& options) {
    if (breakpoints.size() < 2) throw DomainError("integrate_piecewise: need at least two breakpoints");
    // A coarse pass fixes the scale of the whole integral, so that a piece whose
    // contribution is negligible is not refined to its own relative tolerance.
    double scale = 0.0;
    std::size_t evaluations = 0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const double lo = breakpoints[i];
        const double hi = breakpoints[i + 1];
        if (!std::isfinite(lo) || std::isnan(hi) || !(lo < hi))
            throw DomainError("integrate_piecewise: breakpoints must increase");
        const bool infinite = std::isinf(hi);
        Sampler sampler(f, lo, infinite);
        scale += kronrod_panel(sampler, infinite ? 0.0 : lo, infinite ? 1.0 : hi).l1;
        evaluations += sampler.evaluations;
    }
    QuadratureOptions piece = options;
    piece.abs_tol = std::max(options.abs_tol, options.rel_tol * scale / static_cast<double>(breakpoints.size() - 1));

    QuadratureResult total;
    total.evaluations = evaluations;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const auto part = integrate_adaptive(f, breakpoints[i], breakpoints[i + 1], piece);
        total.value += part.value;
        total.abs_error_estimate += part.abs_error_estimate;
        total.evaluations += part.evaluations;
    }
    return total;
}

}  // namespace nse::numerics
