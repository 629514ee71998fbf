#include "nse/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include "nse/errors.hpp"
#include "nse/kernels.hpp"
#include "nse/numerics/quadrature.hpp"
#include "nse/numerics/roots.hpp"
#include "nse/numerics/special.hpp"
#include "nse/numerics/stencil.hpp"

namespace nse::verify {

namespace {

using std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double amplitude_floor = 1e-30;

std::vector<double> uniform(Window w, std::size_t n) {
    std::vector<double> x(n);
    const double h = (w.hi - w.lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) x[i] = w.lo + h * static_cast<double>(i);
    x.back() = w.hi;
    return x;
}

void check_window(const models::SolvableProblem& p, Window w, std::size_t n) {
    if (n < 128) throw DomainError("residual: need at least 128 points");
    if (!(w.hi > w.lo)) throw DomainError("residual: empty window");
    const auto& g = p.ground;
    if (g.dimension > 1 && !(w.lo > 0.0)) throw DomainError("residual: radial window must start at r > 0");
    if (g.support.bounded()) {
        const double edge = g.support.half_width * (1.0 + 1e-12);
        if (w.lo < -edge || w.hi > edge) throw DomainError("residual: window leaves the support");
    }
    if (p.family == "coulomb" && w.lo < 0.05 * g.length_scale * (1.0 - 1e-12))
        throw DomainError("residual: Coulomb window must start at r >= 0.05 a_B");
}


}  // namespace

ResidualReport residual_stationary(const models::SolvableProblem& problem, Window window, std::size_t n_points,
                                   const Perturbation& perturbation, Execution execution) {
    check_window(problem, window, n_points);
    const auto& g = problem.ground;
    const auto& nl = problem.nonlinearity;
    if (!nl.shape_fn) throw DomainError("residual: model has no nonlinearity");

    const auto r = uniform(window, n_points);
    std::vector<double> psi(n_points);
    std::vector<double> external(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        psi[i] = g.norm_const * g.profile(std::abs(r[i]));
        external[i] = nl.external(std::abs(r[i]));
    }

    kernels::serial::StationaryOperator op;
    op.kinetic = problem.constants.hbar * problem.constants.hbar / (2.0 * problem.constants.mass);
    op.energy = g.energy * perturbation.energy;
    op.dimension = g.dimension;
    op.potential.shape = nl.shape_fn;
    op.potential.scale = nl.scale * perturbation.scale;
    op.potential.inv_norm_const = 1.0 / (g.norm_const * perturbation.norm_const);
    op.potential.amplitude_floor = amplitude_floor;

    std::vector<double> residual(n_points);
    const auto sums = execution == Execution::Serial
                          ? kernels::serial::stationary_residual(r, psi, external, op, residual)
                          : kernels::parallel::stationary_residual(r, psi, external, op, residual);

    double psi_sq = 0.0;
    double psi_max = 0.0;
    for (std::size_t i = 1; i + 1 < n_points; ++i) {
        psi_sq += psi[i] * psi[i];
        psi_max = std::max(psi_max, std::abs(psi[i]));
    }
    const double e = std::abs(g.energy);
    ResidualReport out;
    out.l2_rel = std::sqrt(sums.sum_squares) / (e * std::sqrt(psi_sq));
    out.max_rel = sums.max_abs / (e * psi_max);
    out.grid = {n_points, r[1] - r[0], window};
    out.family = problem.family;
    out.params = problem.params;
    return out;
}

ResidualReport residual_boosted(const models::SolvableProblem& problem, double velocity, double time,
                                Window window, std::size_t n_points) {
    const auto& g = problem.ground;
    if (g.dimension != 1) throw DomainError("residual_boosted: one-dimensional families only");
    check_window(problem, Window{window.lo - velocity * time, window.hi - velocity * time}, n_points);
    const auto& nl = problem.nonlinearity;
    const double hbar = problem.constants.hbar;
    const double m = problem.constants.mass;

    const auto x = uniform(window, n_points);
    const double dx = x[1] - x[0];
    std::vector<complex> psi(n_points);
    std::vector<complex> psi_t(n_points);
    const double frequency = (0.5 * m * velocity * velocity + g.energy) / hbar;
    for (std::size_t i = 0; i < n_points; ++i) {
        const double y = x[i] - velocity * time;
        const double envelope = g.norm_const * g.profile(std::abs(y));
        const double envelope_dy = g.norm_const * std::copysign(1.0, y) * g.slope(std::abs(y));
        const complex phase = std::polar(1.0, (m * velocity * x[i] - 0.5 * m * velocity * velocity * time - g.energy * time) / hbar);
        psi[i] = envelope * phase;
        psi_t[i] = -velocity * envelope_dy * phase - complex(0.0, frequency) * psi[i];
    }
    const auto d2 = numerics::second_derivative<complex>(psi, dx);

    double r_sq = 0.0;
    double r_max = 0.0;
    double psi_sq = 0.0;
    double psi_max = 0.0;
    for (std::size_t i = 1; i + 1 < n_points; ++i) {
        const double phi = std::max(std::abs(psi[i]) / g.norm_const, amplitude_floor);
        const double f = nl.scale * nl.shape_fn(phi) + nl.external(std::abs(x[i]));
        const complex res = complex(0.0, hbar) * psi_t[i] + hbar * hbar / (2.0 * m) * d2.values[i] - f * psi[i];
        r_sq += std::norm(res);
        r_max = std::max(r_max, std::abs(res));
        psi_sq += std::norm(psi[i]);
        psi_max = std::max(psi_max, std::abs(psi[i]));
    }
    const double e = std::abs(g.energy);
    ResidualReport out;
    out.l2_rel = std::sqrt(r_sq) / (e * std::sqrt(psi_sq));
    out.max_rel = r_max / (e * psi_max);
    out.grid = {n_points, dx, window};
    out.family = problem.family;
    out.params = problem.params;
    return out;
}

UncertaintyReport uncertainty_1d(const models::SolvableProblem& problem, double width) {
    const auto& g = problem.ground;
    if (g.dimension != 1) throw DomainError("uncertainty: one-dimensional families only");
    numerics::QuadratureOptions opts;
    opts.rel_tol = 1e-13;
    opts.max_depth = 18;
    const std::vector<double> breaks{0.0, 1.0, 4.0, 16.0, 64.0, inf};
    auto integral = [&](auto&& f) { return numerics::integrate_piecewise(f, breaks, opts).value; };

    const double i0 = integral([&](double s) {
        const double phi = g.profile(width * s);
        return phi * phi;
    });
    const double i2 = integral([&](double s) {
        const double phi = g.profile(width * s);
        return s * s * phi * phi;
    });
    const double ip = integral([&](double s) {
        const double d = width * g.slope(width * s);
        return d * d;
    });
    const double hbar = problem.constants.hbar;
    UncertaintyReport out;
    out.delta_x = width * std::sqrt(i2 / i0);
    out.delta_p = hbar / width * std::sqrt(ip / i0);
    out.product_over_hbar = out.delta_x * out.delta_p / hbar;
    out.kinetic_ratio = out.delta_p * out.delta_p / (2.0 * problem.constants.mass * std::abs(g.energy));
    return out;
}

UncertaintyReport uncertainty(const models::ModelSpec& spec) {
    const auto* law = std::get_if<models::PowerLaw>(&spec.family);
    if (law == nullptr) throw DomainError("uncertainty: power-law family only");
    if (!(law->lambda >= 1e-4 && law->lambda <= 1e2)) throw DomainError("uncertainty: lambda must lie in [1e-4, 1e2]");
    auto out = uncertainty_1d(models::make_problem(spec), law->a * std::sqrt(law->lambda));
    out.lambda = law->lambda;
    return out;
}

LimitReport make_limit_report(std::string case_id, double measured, double expected, double tolerance,
                              std::string notes, double denominator_floor) {
    LimitReport r;
    r.case_id = std::move(case_id);
    r.measured = measured;
    r.expected = expected;
    r.rel_dev = std::abs(measured - expected) / std::max(std::abs(expected), denominator_floor);
    r.tolerance = tolerance;
    r.passed = std::isfinite(r.rel_dev) && r.rel_dev <= tolerance;
    r.notes = std::move(notes);
    return r;
}

LimitReport limit_softened_delta_potential_integral(double a, double b0, const models::PhysicalConstants& k) {
    if (!(b0 > 0.0)) throw DomainError("potential integral: b0 must be positive");
    const models::ModelSpec spec{models::SoftenedDelta{a, b0}, k};
    const auto u = [&](double x) { return models::potential(spec, x); };
    std::vector<double> breaks{0.0};
    for (double x = b0; x < 20.0 * std::max(a, b0); x *= 4.0) breaks.push_back(x);
    breaks.push_back(inf);
    numerics::QuadratureOptions opts;
    opts.rel_tol = 1e-13;
    const double measured = 2.0 * numerics::integrate_piecewise(u, breaks, opts).value;
    const double expected = -k.hbar * k.hbar * (2.0 * a + pi * b0) / (2.0 * a * a * k.mass);
    std::ostringstream notes;
    notes << "a=" << a << " b0=" << b0;
    return make_limit_report("softened-delta/potential-integral", measured, expected, 1e-8, notes.str());
}

LimitReport limit_softened_delta_G_integral(double a, double b0) {
    if (!(b0 > 0.0)) throw DomainError("G integral: b0 must be positive");
    const auto nl = models::nonlinearity(models::ModelSpec{models::SoftenedDelta{a, b0}, {}});
    // phi = exp(-u) maps (0, 1) onto (0, inf) and removes the log singularity at phi = 0.
    const auto integrand = [&](double u) {
        const double phi = std::exp(-u);
        return phi == 0.0 ? 0.0 : nl.shape_fn(phi) * phi;
    };
    const double c = b0 / a;
    numerics::QuadratureOptions opts;
    opts.rel_tol = 1e-13;
    // phi = exp(-u) feeds G through log(phi), which rounds at ~1e-16/u near the spike
    opts.abs_tol = 1e-11;
    // G(1) = -1/c - 1: for small c the integrand is a spike of width ~c at u = 0.
    std::vector<double> breaks{0.0};
    for (double u = c; u < 1.0; u *= 4.0) breaks.push_back(u);
    for (double u : {1.0, 4.0, 16.0, inf}) breaks.push_back(u);
    const double measured = numerics::integrate_piecewise(integrand, breaks, opts).value;

    const double ei_term = 0.5 * c * c * std::exp(c) * numerics::ei_paper(c);
    const double literal = -0.5 - 0.5 * c - ei_term;   // Ei(-y) read as +int_y^inf e^-u/u du
    const double standard = -0.5 - 0.5 * c + ei_term;  // Ei(-y) = -int_y^inf e^-u/u du
    const double dev_literal = std::abs(measured - literal) / std::abs(literal);
    const double dev_standard = std::abs(measured - standard) / std::abs(standard);
    std::ostringstream notes;
    notes.precision(3);
    const bool standard_wins = dev_standard <= dev_literal;
    notes << "a=" << a << " b0=" << b0 << "; identity closes with Ei(-y) = "
          << (standard_wins ? "-int_y^inf e^-u/u du (standard sign)" : "+int_y^inf e^-u/u du (sign-positive form)")
          << "; rel. deviation with the other sign " << std::scientific
          << (standard_wins ? dev_literal : dev_standard);
    return make_limit_report("softened-delta/G-integral", measured, standard_wins ? standard : literal, 1e-6,
                             notes.str());
}

std::vector<LimitReport> limit_delta_cusp(double a, const models::PhysicalConstants& k) {
    std::vector<LimitReport> out;
    const auto g = models::ground_state(models::ModelSpec{models::SoftenedDelta{a, 0.0}, k});

    // Even profile: phi'(0-) = -phi'(0+).
    const double jump = 2.0 * g.slope(0.0);
    out.push_back(make_limit_report("delta/cusp-jump", jump, -2.0 / a, 0.0, "phi0'(0+) - phi0'(0-) for exp(-|x|/a)"));
    const double strength = k.hbar * k.hbar / (2.0 * k.mass) * jump / g.profile(0.0);
    out.push_back(make_limit_report("delta/strength", strength, -k.hbar * k.hbar / (a * k.mass), 1e-15,
                                    "(hbar^2/2m) * jump / phi0(0) against the delta-well strength"));

    // exp(-|x|/a) against the free equation on x > 0 (the other side is its mirror image).
    const std::size_t n = 4001;
    const auto x = uniform(Window{0.05 * a, 20.0 * a}, n);
    std::vector<double> phi(n);
    for (std::size_t i = 0; i < n; ++i) phi[i] = g.profile(x[i]);
    const auto d2 = numerics::second_derivative_fourth_order<double>(phi, x[1] - x[0]);
    double r_sq = 0.0;
    double phi_sq = 0.0;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        const double res = -k.hbar * k.hbar / (2.0 * k.mass) * d2.values[i] - g.energy * phi[i];
        r_sq += res * res;
        phi_sq += phi[i] * phi[i];
    }
    const double l2 = std::sqrt(r_sq) / (std::abs(g.energy) * std::sqrt(phi_sq));
    out.push_back(make_limit_report("delta/off-origin-residual", l2, 0.0, 1e-10,
                                    "5-point stencil on x in [0.05a, 20a], zero nonlinearity", 1.0));

    std::vector<double> gaps;
    std::ostringstream notes;
    notes << "max |phi0(b0) - exp(-|x|/a)| for b0/a =";
    for (double frac : {0.1, 0.03, 0.01}) {
        const auto gb = models::ground_state(models::ModelSpec{models::SoftenedDelta{a, frac * a}, k});
        double gap = 0.0;
        for (int i = 0; i <= 20000; ++i) {
            const double xi = 20.0 * a * i / 20000.0;
            gap = std::max(gap, std::abs(gb.profile(xi) - g.profile(xi)));
        }
        gaps.push_back(gap);
        notes << " " << frac << ":" << gap;
    }
    auto shrink = make_limit_report("delta/profile-gap", gaps.back(), 0.0, inf, notes.str(), 1.0);
    shrink.passed = gaps[0] > gaps[1] && gaps[1] > gaps[2];
    out.push_back(shrink);
    return out;
}

std::vector<LimitReport> limit_tan2(const std::vector<double>& betas, double L, const models::PhysicalConstants& k) {
    std::vector<LimitReport> out;
    for (double beta : betas) {
        const models::ModelSpec spec{models::TanSquared{L, beta}, k};
        std::ostringstream id;
        id << "tan2/beta=" << beta;
        if (beta >= 100.0) {
            const auto nl = models::nonlinearity(spec);
            double worst = 0.0;
            constexpr int samples = 20000;
            for (int i = 0; i <= samples; ++i) {
                const double phi = std::exp(std::log(1e-3) * (1.0 - static_cast<double>(i) / samples));
                worst = std::max(worst, std::abs(phi * nl.shape_fn(phi) / beta + 2.0 * phi * std::log(phi)));
            }
            out.push_back(make_limit_report(id.str() + "/scaled-nonlinearity", worst, 0.0, 5e-3,
                                            "max over phi in [1e-3, 1] of |phi G/beta + 2 phi ln phi|", 1.0));
        } else if (beta - 1.0 < 1e-3) {
            const auto g = models::ground_state(spec);
            double worst = 0.0;
            constexpr int samples = 20000;
            for (int i = 0; i <= samples; ++i) {
                const double x = g.support.half_width * (2.0 * i / samples - 1.0);
                worst = std::max(worst, std::abs(g.profile(std::abs(x)) - std::cos(x / L)));
            }
            out.push_back(make_limit_report(id.str() + "/square-well-profile", worst, 0.0, 1e-5,
                                            "max over the box of |phi0 - cos(x/L)|", 1.0));
        }
    }
    const auto g2 = models::ground_state(models::ModelSpec{models::TanSquared{L, 2.0}, k});
    out.push_back(make_limit_report("tan2/E0(beta=2)", g2.energy, k.hbar * k.hbar / (k.mass * L * L), 1e-15,
                                    "E0 = hbar^2 beta/(2 m L^2)"));
    return out;
}

std::vector<LimitReport> limit_trapped_gausson(double omega, const std::vector<double>& fractions,
                                               const models::PhysicalConstants& k) {
    std::vector<LimitReport> out;
    auto spec_for = [&](double f) {
        return models::ModelSpec{models::TrappedGausson{std::sqrt(f) * omega, std::sqrt(1.0 - f) * omega}, k};
    };
    for (double f : fractions) {
        if (!(f > 0.0 && f < 1.0)) throw DomainError("limit_trapped_gausson: fractions must lie in (0, 1)");
        const auto spec = spec_for(f);
        const auto g = models::ground_state(spec);
        const auto nl = models::nonlinearity(spec);
        const double omega2_sq = (1.0 - f) * omega * omega;
        std::ostringstream id;
        id << "trapped-gausson/f=" << f;
        out.push_back(make_limit_report(id.str() + "/A2", nl.scale, k.hbar * omega2_sq / (2.0 * omega), 1e-14,
                                        "A2 = hbar omega2^2 / (2 omega)"));
        double worst = 0.0;
        for (int i = 1; i <= 1000; ++i) {
            const double r = 6.0 * g.length_scale * i / 1000.0;
            const double harmonic = 0.5 * k.mass * omega * omega * r * r;
            worst = std::max(worst, std::abs(nl.term(g.profile(r), r) - harmonic) / harmonic);
        }
        out.push_back(make_limit_report(id.str() + "/pointwise-split", worst, 0.0, 1e-10,
                                        "max_r |U_ext + A2 G(phi0) - m omega^2 r^2/2| / (m omega^2 r^2/2)", 1.0));
    }
    {
        const auto nl = models::nonlinearity(spec_for(1.0));
        out.push_back(make_limit_report("trapped-gausson/f=1/A2", nl.scale, 0.0, 0.0,
                                        "omega2 -> 0: pure harmonic SE, no nonlinearity", 1.0));
    }
    {
        const auto spec = spec_for(0.0);
        const auto nl = models::nonlinearity(spec);
        double ext = 0.0;
        for (int i = 0; i <= 100; ++i) ext = std::max(ext, std::abs(nl.external(0.1 * i)));
        out.push_back(make_limit_report("trapped-gausson/f=0/U_ext", ext, 0.0, 0.0, "omega1 -> 0: no trap", 1.0));
        const double free_scale =
            models::nonlinearity(models::ModelSpec{models::Gausson{omega, 3}, k}).scale;
        out.push_back(make_limit_report("trapped-gausson/f=0/A", nl.scale, free_scale, 1e-15,
                                        "omega1 -> 0: free Gausson scale hbar omega/2"));
    }
    return out;
}

double half_mass_radius(const models::SolvableProblem& problem, double width) {
    const auto& g = problem.ground;
    numerics::QuadratureOptions opts;
    opts.rel_tol = 1e-13;
    const double c0_sq = g.norm_const * g.norm_const;
    auto outside = [&](double x) {
        if (x <= 0.0) return 1.0;
        auto dens = [&](double y) {
            const double phi = g.profile(y);
            return 2.0 * c0_sq * phi * phi;
        };
        return 1.0 - numerics::integrate_adaptive(dens, 0.0, x, opts).value;
    };
    double hi = width;
    while (outside(hi) > 0.5) hi *= 2.0;
    return numerics::invert_monotone(outside, 0.5, 0.0, hi, 1e-12 * width);
}

std::vector<LimitReport> localization_scan(double a, const std::vector<double>& lambdas) {
    std::vector<LimitReport> out;
    std::vector<std::pair<double, double>> radii;
    for (double lambda : lambdas) {
        if (!(lambda > 0.0 && lambda <= 1.0)) throw DomainError("localization_scan: lambda must lie in (0, 1]");
        const auto problem = models::make_problem(models::ModelSpec{models::PowerLaw{a, lambda}, {}});
        const auto& g = problem.ground;
        const double width = a * std::sqrt(lambda);
        numerics::QuadratureOptions opts;
        opts.rel_tol = 1e-13;
        const std::vector<double> breaks{0.0, width, 4.0 * width, 16.0 * width, 64.0 * width, inf};
        const double mass = 2.0 * g.norm_const * g.norm_const *
                            numerics::integrate_piecewise([&](double x) {
                                const double phi = g.profile(x);
                                return phi * phi;
                            }, breaks, opts).value;
        std::ostringstream id;
        id << "power-law/lambda=" << lambda;
        out.push_back(make_limit_report(id.str() + "/mass", mass, 1.0, 1e-8, "analytic c0, quadrature of phi0^2"));
        const double x50 = half_mass_radius(problem, width);
        radii.emplace_back(lambda, x50);
        if (lambda == 1.0)
            out.push_back(make_limit_report(id.str() + "/half-mass-radius", x50, a * std::atanh(0.5), 1e-9,
                                            "tanh(x50/a) = 1/2"));
    }
    std::sort(radii.begin(), radii.end());
    bool monotone = true;
    std::ostringstream notes;
    notes << "x50(lambda):";
    for (std::size_t i = 0; i < radii.size(); ++i) {
        notes << " " << radii[i].first << ":" << radii[i].second;
        if (i > 0 && !(radii[i].second > radii[i - 1].second)) monotone = false;
    }
    auto rep = make_limit_report("power-law/half-mass-monotone", radii.empty() ? 0.0 : radii.front().second, 0.0,
                                 inf, notes.str(), 1.0);
    rep.passed = monotone;
    out.push_back(rep);
    return out;
}

}  // namespace nse::verify
