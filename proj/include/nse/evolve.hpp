#pragma once

// Time-dependent 1D NSE
//   i hbar Psi_t = -(hbar^2/2m) Psi_xx + (A G(|Psi|/c0) + U_ext) Psi
// on a periodic grid (Strang split-step Fourier) or between hard walls
// (Crank-Nicolson with a predictor-corrector nonlinearity).

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nse/field.hpp"
#include "nse/models.hpp"

namespace nse::evolve {

enum class Method { SplitStep, CrankNicolson };

struct EvolutionConfig {
    double dt = 1e-3;
    std::size_t steps = 1;
    Method method = Method::SplitStep;
    double amplitude_floor = 1e-30;
    /// Diagnostics (and snapshots, if kept) every `record_every` steps; 0 records
    /// only the initial and final states.
    std::size_t record_every = 0;
    bool keep_snapshots = false;
};

/// Throws ConfigurationError for dt <= 0, steps == 0, a non-positive floor, or a
/// method that does not fit the grid (SplitStep needs a SpectralGrid,
/// CrankNicolson a BoxGrid).
void validate(const EvolutionConfig& config, const FieldGrid& grid);

struct Diagnostic {
    double t = 0.0;
    double mass = 0.0;
    double peak_x = 0.0;
    /// ||Psi - Psi_ref|| / ||Psi_ref||, NaN without a reference.
    double l2_err = std::numeric_limits<double>::quiet_NaN();
};

/// Raised when the field stops being finite. Carries the last finite state and
/// the diagnostics collected up to it.
class NumericalAbort : public std::runtime_error {
public:
    NumericalAbort(const std::string& what, ComplexField last_good, std::vector<Diagnostic> diagnostics)
        : std::runtime_error(what), last_good_(std::move(last_good)), diagnostics_(std::move(diagnostics)) {}

    const ComplexField& last_good() const noexcept { return last_good_; }
    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    ComplexField last_good_;
    std::vector<Diagnostic> diagnostics_;
};

/// Cosh1D, PowerLaw, Gausson with N = 1, TanSquared, SoftenedDelta with b0 > 0.
bool evolvable(const models::ModelSpec& spec);
/// Throws ConfigurationError unless evolvable(spec).
void require_evolvable(const models::ModelSpec& spec);

/// Boosted ground state c0 phi0(x - x0 - v t) exp(i(m v x - m v^2 t/2 - E0 t)/hbar).
ComplexField boost(const models::SolvableProblem& problem, const FieldGrid& grid, double velocity, double t,
                   double x0 = 0.0);
/// Galilean boost of an arbitrary field at its own time t:
///   Psi'(x) = Psi(x - v t) exp(i(m v x - m v^2 t/2)/hbar).
/// The translation is spectral, so a periodic grid is required unless v t = 0.
ComplexField boost(const ComplexField& field, double velocity, const models::PhysicalConstants& constants);

/// <p> from the discrete spectrum (periodic grids only).
double momentum_expectation(const ComplexField& field, const models::PhysicalConstants& constants);

/// Position of the largest |Psi|, refined by a parabola through its neighbours.
double peak_position(const ComplexField& field);

/// ||a - b|| / ||b|| on a common grid.
double relative_l2_distance(const ComplexField& a, const ComplexField& b);

/// Advances the field in place by config.dt.
class Stepper {
public:
    Stepper(const models::SolvableProblem& problem, const FieldGrid& grid, const EvolutionConfig& config);

    void step(ComplexField& field) const;

private:
    void split_step(ComplexField& field) const;
    void crank_nicolson(ComplexField& field) const;

    models::SolvableProblem problem_;
    EvolutionConfig config_;
    FieldGrid grid_;
    std::vector<double> external_;
    std::vector<double> wavenumbers_;
    std::optional<numerics::FourierTransform> fft_;
};

/// One step; convenience wrapper around Stepper.
ComplexField step(const ComplexField& field, const models::SolvableProblem& problem, const EvolutionConfig& config);
/// Crank-Nicolson step for the boxed tan^2 family.
ComplexField step_crank_nicolson(const ComplexField& field, const models::SolvableProblem& problem,
                                 const EvolutionConfig& config);

using Reference = std::function<ComplexField(double t)>;

/// Analytic boosted ground state on `grid` as a function of time.
Reference boosted_reference(const models::SolvableProblem& problem, const FieldGrid& grid, double velocity,
                            double x0 = 0.0);

struct EvolutionResult {
    ComplexField final_state;
    std::vector<Diagnostic> diagnostics;
    std::vector<ComplexField> snapshots;
};

/// Runs config.steps steps. Throws NumericalAbort on a non-finite field.
EvolutionResult evolve(const models::SolvableProblem& problem, const ComplexField& initial,
                       const EvolutionConfig& config, const Reference& reference = {});

struct CollisionReport {
    /// Cosine similarity of each re-centred |Psi| lobe with c0 phi0, before and
    /// after the collision (left lobe first).
    double pre_correlation[2] = {0.0, 0.0};
    double post_correlation[2] = {0.0, 0.0};
    double correlation = 0.0;  // min of post_correlation
    std::vector<double> times;
    std::vector<double> left_peak;
    std::vector<double> right_peak;
    double mass_drift = 0.0;  // |M(T) - M(0)| / M(0)
    double final_time = 0.0;
    /// Lobes could not be separated after the run.
    bool inconclusive = false;
};

/// Two boosted solitons at -/+ separation/2 with velocities v1 and v2, evolved
/// for T = 2 separation / |v1 - v2|. Cosh1D only; needs v1 != v2 and
/// separation >= 10 a. A zero config.steps is replaced by ceil(T / dt).
CollisionReport collide(const models::ModelSpec& spec, double v1, double v2, double separation,
                        const numerics::SpectralGrid& grid, EvolutionConfig config);

/// Cosine similarity of |Psi| on [lo, hi) with c0 phi0 centred at the
/// parabolic peak inside that range.
double lobe_correlation(const ComplexField& field, const models::GroundState& ground, std::size_t lo,
                        std::size_t hi);

}  // namespace nse::evolve
