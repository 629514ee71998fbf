#pragma once

// Standard verification cases with their tolerances, shared by the CLI
// `verify` subcommands. Every function returns report records; none throws
// for a failed check (only for invalid input).

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nse/models.hpp"
#include "nse/report.hpp"
#include "nse/verify.hpp"

namespace nse::suite {

inline constexpr double construction_tolerance = 1e-6;
inline constexpr double norm_tolerance = 1e-8;
inline constexpr double residual_tolerance = 1e-6;
inline constexpr double negative_control_floor = 1e-4;

/// Default-parameter specs of every family: lambda in {0.5, 1, 2}, N in {1, 2, 3}
/// for the dimension-carrying families.
std::vector<models::ModelSpec> certification_specs();

struct ResidualSetup {
    verify::Window window;
    std::size_t points = 0;
};

/// Window and resolution at which each family's stationary residual is pinned.
ResidualSetup residual_setup(const models::ModelSpec& spec);

/// Residual at `setup` (default residual_setup) plus the 1% energy control.
std::vector<report::CaseReport> residual_cases(const models::ModelSpec& spec,
                                               const std::optional<ResidualSetup>& setup = {});
/// Synthesized vs. analytic G on [1e-3, 1 - 1e-3].
std::vector<report::CaseReport> invert_cases(const models::ModelSpec& spec);
/// Analytic vs. quadrature c0. The softened delta has no closed form in the
/// catalog; it is checked against c0^-2 = 2 b0 e^{2 b0/a} K1(2 b0/a).
std::vector<report::CaseReport> norm_cases(const models::ModelSpec& spec);
/// Heisenberg bound, small-lambda asymptotics (lambda <= 0.1, kinetic ratio
/// for lambda <= 0.01) and the closed lambda = 1 product.
std::vector<report::CaseReport> uncertainty_cases(double a, double lambda, const models::PhysicalConstants& k = {});

struct LimitOptions {
    std::optional<double> a;
    std::optional<double> b0;
    std::optional<double> L;
    std::optional<double> omega;
};

/// Names accepted by limit_cases.
const std::vector<std::string>& limit_case_names();
/// "softened-delta", "delta", "tan2", "trapped-gausson", "power-law". Unset
/// options fall back to the standard parameter sets.
std::vector<report::CaseReport> limit_cases(const std::string& name, const LimitOptions& options = {});

/// Every standard case; independent groups run concurrently.
std::vector<report::CaseReport> all_cases();

}  // namespace nse::suite
