#include "nse/construct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nse/errors.hpp"
#include "nse/numerics/roots.hpp"

namespace nse::construct {

namespace {

constexpr double truncation_level = 1e-6;

/// phi in [phi_min, 1 - phi_min], uniform in logit(phi) so both ends are dense.
std::vector<double> logit_grid(double phi_min, std::size_t n) {
    const double lo = std::log(phi_min / (1.0 - phi_min));
    const double hi = -lo;
    std::vector<double> phi(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        phi[i] = 1.0 / (1.0 + std::exp(-u));
    }
    phi.front() = phi_min;
    phi.back() = 1.0 - phi_min;
    return phi;
}

}  // namespace

double truncation_radius(const models::GroundState& ground) {
    if (ground.support.bounded()) return ground.support.half_width;
    double r = ground.length_scale;
    for (int i = 0; i < 64 && ground.profile(r) >= truncation_level; ++i) r *= 2.0;
    return r;
}

double invert_profile(const models::GroundState& ground, double phi) {
    if (!(phi > 0.0 && phi <= 1.0)) throw DomainError("invert_profile: phi must lie in (0, 1]");
    if (phi == 1.0) return 0.0;
    const double r_max = truncation_radius(ground);
    try {
        return numerics::invert_monotone(ground.profile, phi, 0.0, r_max, 1e-12 * ground.length_scale);
    } catch (const BracketError&) {
        throw DomainError("invert_profile: phi below the profile value at the truncation radius");
    }
}

void require_monotone_profile(const models::GroundState& ground) {
    constexpr int samples = 1000;
    const double r_max = truncation_radius(ground);
    if (ground.profile(0.0) != 1.0) throw DomainError("profile must satisfy phi0(0) = 1");
    double previous = 1.0;
    for (int i = 1; i <= samples; ++i) {
        const double phi = ground.profile(r_max * i / samples);
        if (previous > 0.0 && !(phi < previous))
            throw DomainError("profile is not strictly decreasing; it cannot be inverted");
        previous = phi;
    }
}

SynthesizedNonlinearity synthesize(const models::SolvableProblem& problem, double phi_min, std::size_t n_points) {
    if (!(phi_min > 0.0 && phi_min < 0.5)) throw DomainError("synthesize: phi_min must lie in (0, 1/2)");
    if (n_points < 16) throw DomainError("synthesize: need at least 16 points");
    const auto& nl = problem.nonlinearity;
    if (!(nl.scale != 0.0) || !nl.shape_fn) throw DomainError("synthesize: model has no nonlinearity to compare");
    require_monotone_profile(problem.ground);

    SynthesizedNonlinearity out;
    for (double phi : logit_grid(phi_min, n_points)) {
        double r = 0.0;
        try {
            r = invert_profile(problem.ground, phi);
        } catch (const DomainError&) {
            out.range_shrunk = true;
            continue;
        }
        const double synth = (problem.potential(r) - nl.external(r)) / nl.scale;
        const double analytic = nl.shape(phi);
        const double denom = std::max(std::abs(analytic), std::numeric_limits<double>::min());
        const double dev = std::abs(synth - analytic) / denom;
        out.phi.push_back(phi);
        out.g_synth.push_back(synth);
        out.g_analytic.push_back(analytic);
        out.rel_dev.push_back(dev);
        out.deviation_vs_analytic = std::max(out.deviation_vs_analytic, dev);
    }
    if (out.phi.empty()) throw DomainError("synthesize: no phi in the window could be inverted");
    return out;
}

SynthesizedNonlinearity synthesize(const models::ModelSpec& spec, double phi_min, std::size_t n_points) {
    return synthesize(models::make_problem(spec), phi_min, n_points);
}

double verify_method(const models::ModelSpec& spec) { return synthesize(spec).deviation_vs_analytic; }

}  // namespace nse::construct
