#pragma once

// Generic construction of the nonlinearity from a solvable linear problem:
// invert the ground-state profile, r = phi0^{-1}(phi), and read off
// G(phi) = [U(r) - U_ext(r)] / A. Nothing here knows which family it handles.

#include <cstddef>
#include <vector>

#include "nse/models.hpp"

namespace nse::construct {

/// Radius beyond which a profile is treated as zero: the support edge for
/// boxed families, otherwise the first doubling of length_scale where
/// phi0 < 1e-6.
double truncation_radius(const models::GroundState& ground);

/// r with phi0(r) = phi, to 1e-12 * length_scale. Throws DomainError for phi
/// outside (0, 1] or below phi0 at the truncation radius.
double invert_profile(const models::GroundState& ground, double phi);

/// Throws DomainError unless phi0 is strictly decreasing on a 1000-point
/// sample of [0, truncation_radius].
void require_monotone_profile(const models::GroundState& ground);

struct SynthesizedNonlinearity {
    std::vector<double> phi;         // strictly increasing
    std::vector<double> g_synth;
    std::vector<double> g_analytic;
    std::vector<double> rel_dev;
    double deviation_vs_analytic = 0.0;  // max of rel_dev
    /// Extreme phi values whose inversion fell outside the truncation radius
    /// were dropped.
    bool range_shrunk = false;
};

/// Window [phi_min, 1 - phi_min], log-spaced towards both ends.
SynthesizedNonlinearity synthesize(const models::SolvableProblem& problem, double phi_min = 1e-3,
                                   std::size_t n_points = 200);
SynthesizedNonlinearity synthesize(const models::ModelSpec& spec, double phi_min = 1e-3,
                                   std::size_t n_points = 200);

/// Worst relative deviation between synthesized and catalog G on the default window.
double verify_method(const models::ModelSpec& spec);

}  // namespace nse::construct
