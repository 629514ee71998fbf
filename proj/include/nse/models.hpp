#pragma once

// Catalog of the exactly solvable families: potential U, ground state
// (phi0, E0, c0) and the nonlinearity F = A G(|Psi|/c0) (+ U_ext) obtained by
// inverting the ground-state profile.
//
// All formulas keep hbar and m explicit (PhysicalConstants, default 1).

#include <functional>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nse/field.hpp"

namespace nse::models {

struct PhysicalConstants {
    double hbar = 1.0;
    double mass = 1.0;
};

/// Harmonic oscillator ground state; logarithmic nonlinearity.
struct Gausson {
    double omega = 1.0;
    int dimension = 3;
};

/// N = 3 oscillator with frequency^2 = omega1^2 + omega2^2; only the omega2
/// part is rewritten as a nonlinearity, omega1 stays an external trap.
/// Either frequency may be zero (the two endpoint theories), not both.
struct TrappedGausson {
    double omega1 = 1.0 / 1.4142135623730951;
    double omega2 = 1.0 / 1.4142135623730951;
};

/// 1D 1/cosh soliton, cubic nonlinearity.
struct Cosh1D {
    double a = 1.0;
};

/// 1/cosh(r/a) ground state in N dimensions.
struct CoshND {
    double a = 1.0;
    int dimension = 3;
};

/// phi0 = cosh(x/a)^(-1/lambda); nonlinearity proportional to |Psi|^(2 lambda).
struct PowerLaw {
    double a = 1.0;
    double lambda = 1.0;
};

/// beta(beta-1) tan^2(x/L) well between infinite walls at |x| = pi L/2.
struct TanSquared {
    double L = 1.0;
    double beta = 2.0;
};

/// Regularized delta well; b0 -> 0 gives -(hbar^2/(a m)) delta(x).
/// b0 = 0 is accepted for the ground state only.
struct SoftenedDelta {
    double a = 1.0;
    double b0 = 1.0;
};

/// Hydrogen-like ground state in N = 3, bohr_radius is the primitive input.
struct Coulomb {
    double bohr_radius = 1.0;
};

using Family = std::variant<Gausson, TrappedGausson, Cosh1D, CoshND, PowerLaw, TanSquared, SoftenedDelta, Coulomb>;

struct ModelSpec {
    Family family;
    PhysicalConstants constants;
};

/// CLI/JSON family name ("gausson", "trapped-gausson", "cosh1d", "coshNd",
/// "power-law", "tan2", "softened-delta", "coulomb").
std::string family_name(const ModelSpec& spec);
const std::vector<std::string>& family_names();
int dimension(const ModelSpec& spec);
/// Parameter echo keyed like the CLI flags (omega, a, lambda, N, hbar, ...).
std::map<std::string, double> parameters(const ModelSpec& spec);
/// Throws DomainError on non-positive lengths/frequencies, beta <= 1, ...
void validate(const ModelSpec& spec);

struct Support {
    /// +infinity for unbounded families; pi L / 2 for the tan^2 box.
    double half_width = std::numeric_limits<double>::infinity();
    bool bounded() const { return half_width < std::numeric_limits<double>::infinity(); }
};

struct GroundState {
    std::function<double(double)> profile;  // phi0(r), r >= 0 (|x| in 1D)
    std::function<double(double)> slope;    // d phi0 / dr, right derivative at r = 0
    double energy = 0.0;
    double norm_const = 0.0;
    double length_scale = 1.0;
    Support support;
    int dimension = 1;
};

struct Nonlinearity {
    double scale = 0.0;                          // A
    std::function<double(double)> shape_fn;      // G, analytically continued past phi = 1
    std::function<double(double)> external;      // U_ext(r), zero except the trapped Gausson
    std::string domain_note;

    /// G(phi), restricted to phi in (0, 1]. Throws DomainError otherwise.
    double shape(double phi) const;
    /// A G(phi) + U_ext(r): the full local potential felt by Psi.
    double term(double phi, double r) const { return scale * shape_fn(phi) + external(r); }
};

/// U(r). The tan^2 walls return +infinity and the Coulomb origin (and the
/// b0 = 0 delta at x = 0) return -infinity.
double potential(const ModelSpec& spec, double r);
GroundState ground_state(const ModelSpec& spec);
/// Throws DomainError for the b0 = 0 softened delta (a limit object).
Nonlinearity nonlinearity(const ModelSpec& spec);

/// c0 from quadrature of S_N r^{N-1} phi0^2 over the support.
double norm_constant_numeric(const GroundState& ground);
double norm_constant_numeric(const ModelSpec& spec);

/// Everything the generic machinery (construct, verify, evolve) sees of a model.
struct SolvableProblem {
    std::string family;
    std::map<std::string, double> params;
    PhysicalConstants constants;
    std::function<double(double)> potential;
    GroundState ground;
    Nonlinearity nonlinearity;
};

SolvableProblem make_problem(const ModelSpec& spec);

/// c0 phi0(|x|) exp(-i E0 t/hbar) on the grid. Throws DomainError when the grid
/// reaches outside the support or the model is not one-dimensional.
ComplexField sample_stationary(const ModelSpec& spec, const FieldGrid& grid, double t);
ComplexField sample_stationary(const SolvableProblem& problem, const FieldGrid& grid, double t);

/// Parses "gausson", "coshNd", ... with parameters; unspecified keys keep defaults.
ModelSpec make_spec(std::string_view family, const std::map<std::string, double>& params);

}  // namespace nse::models
