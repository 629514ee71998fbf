#include "nse/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "nse/errors.hpp"
#include "nse/kernels.hpp"

namespace nse::evolve {

namespace {

constexpr complex I{0.0, 1.0};

kernels::LocalPotential local_potential(const models::SolvableProblem& problem, double floor) {
    kernels::LocalPotential p;
    p.shape = problem.nonlinearity.shape_fn;
    p.scale = problem.nonlinearity.scale;
    p.inv_norm_const = 1.0 / problem.ground.norm_const;
    p.amplitude_floor = floor;
    return p;
}

bool all_finite(const std::vector<complex>& samples) {
    return std::isfinite(kernels::parallel::mass(samples, 1.0));
}

/// Parabolic vertex offset in units of the grid spacing, from three samples.
double parabolic_offset(double left, double centre, double right) {
    const double denom = left - 2.0 * centre + right;
    if (denom == 0.0) return 0.0;
    return std::clamp(0.5 * (left - right) / denom, -0.5, 0.5);
}

std::vector<double> moduli(const ComplexField& field) {
    std::vector<double> a(field.samples.size());
    for (std::size_t j = 0; j < a.size(); ++j) a[j] = std::abs(field.samples[j]);
    return a;
}

struct Lobes {
    std::size_t left_peak = 0;
    std::size_t right_peak = 0;
    std::size_t split = 0;
    bool separated = false;
};

/// The two largest local maxima of |Psi| (above 10% of the global maximum)
/// and the density minimum between them.
Lobes find_lobes(const std::vector<double>& a) {
    Lobes out;
    const double top = *std::max_element(a.begin(), a.end());
    std::vector<std::size_t> peaks;
    for (std::size_t j = 1; j + 1 < a.size(); ++j)
        if (a[j] >= a[j - 1] && a[j] > a[j + 1] && a[j] > 0.1 * top) peaks.push_back(j);
    if (peaks.size() < 2) {
        const auto p = static_cast<std::size_t>(std::max_element(a.begin(), a.end()) - a.begin());
        out.left_peak = out.right_peak = out.split = p;
        return out;
    }
    std::partial_sort(peaks.begin(), peaks.begin() + 2, peaks.end(),
                      [&](std::size_t i, std::size_t j) { return a[i] > a[j]; });
    out.left_peak = std::min(peaks[0], peaks[1]);
    out.right_peak = std::max(peaks[0], peaks[1]);
    out.split = static_cast<std::size_t>(
        std::min_element(a.begin() + static_cast<std::ptrdiff_t>(out.left_peak),
                         a.begin() + static_cast<std::ptrdiff_t>(out.right_peak) + 1) -
        a.begin());
    out.separated = a[out.split] < 1e-2 * std::min(a[out.left_peak], a[out.right_peak]);
    return out;
}

double refined_position(const FieldGrid& grid, const std::vector<double>& a, std::size_t p) {
    const std::size_t n = a.size();
    const auto x = [&](std::size_t j) {
        return std::visit([&](const auto& g) { return g.position(j); }, grid);
    };
    double left = 0.0;
    double right = 0.0;
    if (is_periodic(grid)) {
        left = a[(p + n - 1) % n];
        right = a[(p + 1) % n];
    } else {
        if (p == 0 || p + 1 == n) return x(p);
        left = a[p - 1];
        right = a[p + 1];
    }
    return x(p) + parabolic_offset(left, a[p], right) * grid_spacing(grid);
}

void thomas_solve(complex off, std::vector<complex>& diag, std::vector<complex>& rhs) {
    // Constant off-diagonals; diag and rhs are overwritten, rhs holds the solution.
    const std::size_t m = diag.size();
    for (std::size_t j = 1; j < m; ++j) {
        if (std::abs(diag[j - 1]) < 1e-300) throw DomainError("crank-nicolson: singular tridiagonal pivot");
        const complex w = off / diag[j - 1];
        diag[j] -= w * off;
        rhs[j] -= w * rhs[j - 1];
    }
    rhs[m - 1] /= diag[m - 1];
    for (std::size_t j = m - 1; j-- > 0;) rhs[j] = (rhs[j] - off * rhs[j + 1]) / diag[j];
}

}  // namespace

void validate(const EvolutionConfig& config, const FieldGrid& grid) {
    if (!(config.dt > 0.0) || !std::isfinite(config.dt)) throw ConfigurationError("evolution: dt must be positive");
    if (config.steps == 0) throw ConfigurationError("evolution: steps must be positive");
    if (!(config.amplitude_floor > 0.0)) throw ConfigurationError("evolution: amplitude floor must be positive");
    if (config.method == Method::SplitStep && !is_periodic(grid))
        throw ConfigurationError("evolution: split-step needs a periodic spectral grid");
    if (config.method == Method::CrankNicolson && is_periodic(grid))
        throw ConfigurationError("evolution: Crank-Nicolson needs a box grid with walls");
}

bool evolvable(const models::ModelSpec& spec) {
    return std::visit(
        [](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, models::Cosh1D> || std::is_same_v<T, models::PowerLaw> ||
                          std::is_same_v<T, models::TanSquared>)
                return true;
            else if constexpr (std::is_same_v<T, models::Gausson>)
                return f.dimension == 1;
            else if constexpr (std::is_same_v<T, models::SoftenedDelta>)
                return f.b0 > 0.0;
            else
                return false;
        },
        spec.family);
}

void require_evolvable(const models::ModelSpec& spec) {
    if (!evolvable(spec))
        throw ConfigurationError("evolution: '" + models::family_name(spec) +
                                 "' with these parameters is not a 1D evolution family");
}

ComplexField boost(const models::SolvableProblem& problem, const FieldGrid& grid, double velocity, double t,
                   double x0) {
    const auto& g = problem.ground;
    if (g.dimension != 1) throw DomainError("boost: one-dimensional families only");
    const double hbar = problem.constants.hbar;
    const double m = problem.constants.mass;
    const auto x = grid_positions(grid);
    ComplexField field{grid, std::vector<complex>(x.size()), t};
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double y = std::abs(x[j] - x0 - velocity * t);
        const double amp = (g.support.bounded() && y >= g.support.half_width) ? 0.0 : g.norm_const * g.profile(y);
        const double angle = (m * velocity * x[j] - 0.5 * m * velocity * velocity * t - g.energy * t) / hbar;
        field.samples[j] = amp * std::polar(1.0, angle);
    }
    return field;
}

ComplexField boost(const ComplexField& field, double velocity, const models::PhysicalConstants& constants) {
    ComplexField out = field;
    const double shift = velocity * field.time;
    if (shift != 0.0) {
        const auto* grid = std::get_if<numerics::SpectralGrid>(&field.grid);
        if (grid == nullptr) throw ConfigurationError("boost: translating a field needs a periodic grid");
        const numerics::FourierTransform fft(grid->n);
        fft.forward(out.samples);
        const auto k = grid->wavenumbers();
        for (std::size_t j = 0; j < k.size(); ++j) out.samples[j] *= std::polar(1.0, -k[j] * shift);
        fft.inverse(out.samples);
    }
    const auto x = grid_positions(field.grid);
    const double m = constants.mass;
    for (std::size_t j = 0; j < x.size(); ++j)
        out.samples[j] *= std::polar(1.0, (m * velocity * x[j] - 0.5 * m * velocity * velocity * field.time) /
                                              constants.hbar);
    return out;
}

double momentum_expectation(const ComplexField& field, const models::PhysicalConstants& constants) {
    const auto* grid = std::get_if<numerics::SpectralGrid>(&field.grid);
    if (grid == nullptr) throw ConfigurationError("momentum_expectation: periodic grid required");
    auto spectrum = numerics::dft_forward(field.samples);
    const auto k = grid->wavenumbers();
    double num = 0.0;
    double den = 0.0;
    for (std::size_t j = 0; j < k.size(); ++j) {
        const double w = std::norm(spectrum[j]);
        num += k[j] * w;
        den += w;
    }
    return constants.hbar * num / den;
}

double peak_position(const ComplexField& field) {
    const auto a = moduli(field);
    const auto p = static_cast<std::size_t>(std::max_element(a.begin(), a.end()) - a.begin());
    return refined_position(field.grid, a, p);
}

double relative_l2_distance(const ComplexField& a, const ComplexField& b) {
    if (a.samples.size() != b.samples.size()) throw ConfigurationError("relative_l2_distance: grid mismatch");
    const double dx = grid_spacing(b.grid);
    return std::sqrt(kernels::parallel::squared_distance(a.samples, b.samples, dx) /
                     kernels::parallel::mass(b.samples, dx));
}

Stepper::Stepper(const models::SolvableProblem& problem, const FieldGrid& grid, const EvolutionConfig& config)
    : problem_(problem), config_(config), grid_(grid) {
    validate(config, grid);
    if (problem.ground.dimension != 1) throw ConfigurationError("evolution: one-dimensional families only");
    if (!problem.nonlinearity.shape_fn) throw ConfigurationError("evolution: model has no nonlinearity");
    if (problem.ground.support.bounded() && is_periodic(grid))
        throw ConfigurationError("evolution: a walled family cannot use a periodic grid");
    const auto x = grid_positions(grid);
    external_.resize(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) external_[j] = problem.nonlinearity.external(std::abs(x[j]));
    if (const auto* g = std::get_if<numerics::SpectralGrid>(&grid)) {
        wavenumbers_ = g->wavenumbers();
        fft_.emplace(g->n);
    }
}

void Stepper::step(ComplexField& field) const {
    if (field.samples.size() != grid_size(grid_)) throw ConfigurationError("evolution: field does not match grid");
    if (config_.method == Method::SplitStep)
        split_step(field);
    else
        crank_nicolson(field);
    field.time += config_.dt;
}

void Stepper::split_step(ComplexField& field) const {
    const auto potential = local_potential(problem_, config_.amplitude_floor);
    const double hbar = problem_.constants.hbar;
    const double half = 0.5 * config_.dt / hbar;
    kernels::parallel::apply_nonlinear_phase(field.samples, external_, potential, half);
    fft_->forward(field.samples);
    kernels::parallel::apply_spectral_phase(field.samples, wavenumbers_,
                                            hbar * config_.dt / (2.0 * problem_.constants.mass));
    fft_->inverse(field.samples);
    kernels::parallel::apply_nonlinear_phase(field.samples, external_, potential, half);
}

void Stepper::crank_nicolson(ComplexField& field) const {
    const std::size_t n = field.samples.size();
    const std::size_t m = n - 2;
    const double dx = grid_spacing(grid_);
    const double hbar = problem_.constants.hbar;
    const double kinetic = hbar * hbar / (2.0 * problem_.constants.mass) / (dx * dx);
    const double alpha = 0.5 * config_.dt / hbar;
    const auto potential = local_potential(problem_, config_.amplitude_floor);
    const auto v_at = [&](double amplitude, std::size_t j) {
        const double phi = std::max(amplitude * potential.inv_norm_const, potential.amplitude_floor);
        return potential.scale * potential.shape(phi) + external_[j];
    };

    auto& psi = field.samples;
    psi.front() = 0.0;
    psi.back() = 0.0;
    const complex off = -I * alpha * kinetic;
    std::vector<complex> diag(m);
    std::vector<complex> rhs(m);
    std::vector<double> v(n, 0.0);

    const auto solve = [&]() {
        for (std::size_t j = 1; j + 1 < n; ++j) {
            const complex h_psi = kinetic * (2.0 * psi[j] - psi[j - 1] - psi[j + 1]) + v[j] * psi[j];
            rhs[j - 1] = psi[j] - I * alpha * h_psi;
            diag[j - 1] = 1.0 + I * alpha * (2.0 * kinetic + v[j]);
        }
        thomas_solve(off, diag, rhs);
        return rhs;
    };

    for (std::size_t j = 1; j + 1 < n; ++j) v[j] = v_at(std::abs(psi[j]), j);
    const auto predicted = solve();
    for (std::size_t j = 1; j + 1 < n; ++j) v[j] = v_at(std::abs(0.5 * (psi[j] + predicted[j - 1])), j);
    const auto corrected = solve();
    for (std::size_t j = 1; j + 1 < n; ++j) psi[j] = corrected[j - 1];
}

ComplexField step(const ComplexField& field, const models::SolvableProblem& problem, const EvolutionConfig& config) {
    ComplexField out = field;
    Stepper(problem, field.grid, config).step(out);
    return out;
}

ComplexField step_crank_nicolson(const ComplexField& field, const models::SolvableProblem& problem,
                                 const EvolutionConfig& config) {
    auto cfg = config;
    cfg.method = Method::CrankNicolson;
    return step(field, problem, cfg);
}

Reference boosted_reference(const models::SolvableProblem& problem, const FieldGrid& grid, double velocity,
                            double x0) {
    return [problem, grid, velocity, x0](double t) { return boost(problem, grid, velocity, t, x0); };
}

EvolutionResult evolve(const models::SolvableProblem& problem, const ComplexField& initial,
                       const EvolutionConfig& config, const Reference& reference) {
    const Stepper stepper(problem, initial.grid, config);
    EvolutionResult result;
    result.final_state = initial;
    auto& field = result.final_state;
    const double dx = grid_spacing(field.grid);

    const auto record = [&]() {
        Diagnostic d;
        d.t = field.time;
        d.mass = kernels::parallel::mass(field.samples, dx);
        d.peak_x = peak_position(field);
        if (reference) d.l2_err = relative_l2_distance(field, reference(field.time));
        result.diagnostics.push_back(d);
        if (config.keep_snapshots) result.snapshots.push_back(field);
    };

    if (!all_finite(field.samples)) throw NumericalAbort("evolution: initial field is not finite", field, {});
    record();
    ComplexField last_good = field;
    const double t0 = field.time;
    for (std::size_t s = 1; s <= config.steps; ++s) {
        stepper.step(field);
        field.time = t0 + static_cast<double>(s) * config.dt;  // no drift from repeated addition
        if (!all_finite(field.samples)) {
            std::ostringstream msg;
            msg << "evolution: non-finite field after step " << s << " (t = " << field.time << ")";
            throw NumericalAbort(msg.str(), last_good, result.diagnostics);
        }
        const bool due = (config.record_every > 0 && s % config.record_every == 0) || s == config.steps;
        if (due) record();
        last_good.samples = field.samples;
        last_good.time = field.time;
    }
    return result;
}

double lobe_correlation(const ComplexField& field, const models::GroundState& ground, std::size_t lo,
                        std::size_t hi) {
    if (!(lo < hi && hi <= field.samples.size())) throw DomainError("lobe_correlation: empty range");
    const auto a = moduli(field);
    const auto p = static_cast<std::size_t>(
        std::max_element(a.begin() + static_cast<std::ptrdiff_t>(lo), a.begin() + static_cast<std::ptrdiff_t>(hi)) -
        a.begin());
    const double centre = refined_position(field.grid, a, p);
    const auto x = grid_positions(field.grid);
    double ab = 0.0;
    double aa = 0.0;
    double bb = 0.0;
    for (std::size_t j = lo; j < hi; ++j) {
        const double b = ground.norm_const * ground.profile(std::abs(x[j] - centre));
        ab += a[j] * b;
        aa += a[j] * a[j];
        bb += b * b;
    }
    return ab / std::sqrt(aa * bb);
}

CollisionReport collide(const models::ModelSpec& spec, double v1, double v2, double separation,
                        const numerics::SpectralGrid& grid, EvolutionConfig config) {
    const auto* cosh = std::get_if<models::Cosh1D>(&spec.family);
    if (cosh == nullptr) throw ConfigurationError("collide: cosh1d family only");
    if (v1 == v2) throw DomainError("collide: velocities must differ");
    if (separation < 10.0 * cosh->a) throw DomainError("collide: separation must be at least 10 a");
    config.method = Method::SplitStep;

    const auto problem = models::make_problem(spec);
    const double total_time = 2.0 * separation / std::abs(v1 - v2);
    if (config.steps == 0) config.steps = static_cast<std::size_t>(std::ceil(total_time / config.dt));
    if (config.record_every == 0) config.record_every = std::max<std::size_t>(1, config.steps / 200);

    ComplexField field = boost(problem, grid, v1, 0.0, -0.5 * separation);
    const ComplexField second = boost(problem, grid, v2, 0.0, 0.5 * separation);
    for (std::size_t j = 0; j < field.samples.size(); ++j) field.samples[j] += second.samples[j];

    CollisionReport report;
    const auto correlate = [&](double (&out)[2]) {
        const auto lobes = find_lobes(moduli(field));
        if (!lobes.separated) return false;
        out[0] = lobe_correlation(field, problem.ground, 0, lobes.split);
        out[1] = lobe_correlation(field, problem.ground, lobes.split, field.samples.size());
        return true;
    };
    const auto track = [&]() {
        const auto a = moduli(field);
        const auto lobes = find_lobes(a);
        report.times.push_back(field.time);
        report.left_peak.push_back(refined_position(field.grid, a, lobes.left_peak));
        report.right_peak.push_back(refined_position(field.grid, a, lobes.right_peak));
    };

    if (!correlate(report.pre_correlation)) throw DomainError("collide: initial solitons overlap");
    const double dx = grid.dx();
    const double mass0 = kernels::parallel::mass(field.samples, dx);
    track();

    const Stepper stepper(problem, grid, config);
    ComplexField last_good = field;
    for (std::size_t s = 1; s <= config.steps; ++s) {
        stepper.step(field);
        field.time = static_cast<double>(s) * config.dt;
        if (!all_finite(field.samples)) {
            std::ostringstream msg;
            msg << "collide: non-finite field after step " << s;
            throw NumericalAbort(msg.str(), last_good, {});
        }
        if (s % config.record_every == 0 || s == config.steps) track();
        last_good.samples = field.samples;
        last_good.time = field.time;
    }

    report.final_time = field.time;
    report.mass_drift = std::abs(kernels::parallel::mass(field.samples, dx) - mass0) / mass0;
    report.inconclusive = !correlate(report.post_correlation);
    report.correlation = report.inconclusive ? 0.0 : std::min(report.post_correlation[0], report.post_correlation[1]);
    return report;
}

}  // namespace nse::evolve
