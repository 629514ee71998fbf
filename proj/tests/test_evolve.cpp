#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "nse/errors.hpp"
#include "nse/evolve.hpp"
#include "nse/models.hpp"

using namespace nse;
using numerics::SpectralGrid;

namespace {

models::SolvableProblem cosh_problem() { return models::make_problem({models::Cosh1D{1.0}, {}}); }

double traveling_error(double dt, double T, std::size_t n = 4096) {
    const auto problem = cosh_problem();
    const FieldGrid grid = SpectralGrid(n, -40.0, 40.0);
    const double v = 0.5;
    const auto reference = evolve::boosted_reference(problem, grid, v, -2.5);
    evolve::EvolutionConfig config;
    config.dt = dt;
    config.steps = static_cast<std::size_t>(std::llround(T / dt));
    const auto result = evolve::evolve(problem, reference(0.0), config, reference);
    return result.diagnostics.back().l2_err;
}

// least-squares slope of y against x
double slope(const std::vector<double>& x, const std::vector<double>& y) {
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= x.size();
    my /= y.size();
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

}  // namespace

TEST_CASE("traveling cosh soliton follows the boosted solution") {
    const auto problem = cosh_problem();
    const FieldGrid grid = SpectralGrid(4096, -40.0, 40.0);
    const double v = 0.5;
    const auto reference = evolve::boosted_reference(problem, grid, v, -2.5);
    evolve::EvolutionConfig config;
    config.dt = 1e-3;
    config.steps = 10000;
    config.record_every = 500;
    const auto result = evolve::evolve(problem, reference(0.0), config, reference);

    const auto& d = result.diagnostics;
    REQUIRE(d.size() == 21);
    CHECK(d.back().t == doctest::Approx(10.0));
    CHECK(d.back().l2_err < 1e-4);
    CHECK(std::abs(d.back().mass - d.front().mass) / d.front().mass < 1e-12);

    std::vector<double> t, x;
    for (const auto& e : d) {
        t.push_back(e.t);
        x.push_back(e.peak_x);
    }
    CHECK(std::abs(slope(t, x) - v) / v < 0.01);
}

TEST_CASE("split-step error is second order in dt") {
    const double coarse = traveling_error(0.04, 2.0, 1024);
    const double fine = traveling_error(0.02, 2.0, 1024);
    const double ratio = coarse / fine;
    INFO("coarse " << coarse << " fine " << fine);
    CHECK(ratio >= 3.0);
    CHECK(ratio <= 5.0);
}

TEST_CASE("logarithmic Gausson stays stationary") {
    const auto problem = models::make_problem({models::Gausson{1.0, 1}, {}});
    const FieldGrid grid = SpectralGrid(1024, -16.0, 16.0);
    const auto reference = [&](double t) { return models::sample_stationary(problem, grid, t); };
    evolve::EvolutionConfig config;
    config.dt = 1e-3;
    config.steps = 2000;
    const auto result = evolve::evolve(problem, reference(0.0), config, reference);
    CHECK(result.diagnostics.back().l2_err < 1e-5);
}

TEST_CASE("power-law soliton travels") {
    const auto problem = models::make_problem({models::PowerLaw{1.0, 0.5}, {}});
    const FieldGrid grid = SpectralGrid(2048, -40.0, 40.0);
    const auto reference = evolve::boosted_reference(problem, grid, 0.5);
    evolve::EvolutionConfig config;
    config.dt = 1e-3;
    config.steps = 2000;
    const auto result = evolve::evolve(problem, reference(0.0), config, reference);
    CHECK(result.diagnostics.back().l2_err < 1e-4);
}

TEST_CASE("Crank-Nicolson keeps the tan^2 ground state between the walls") {
    const models::ModelSpec spec{models::TanSquared{1.0, 2.0}, {}};
    const auto problem = models::make_problem(spec);
    const double w = problem.ground.support.half_width;
    const FieldGrid grid = BoxGrid(1025, -w, w);
    const double period = 2.0 * std::numbers::pi / std::abs(problem.ground.energy);
    const auto reference = [&](double t) { return models::sample_stationary(problem, grid, t); };

    evolve::EvolutionConfig config;
    config.method = evolve::Method::CrankNicolson;
    config.dt = 1e-3;
    config.steps = static_cast<std::size_t>(std::ceil(5.0 * period / config.dt));
    const auto result = evolve::evolve(problem, reference(0.0), config, reference);

    const auto& d = result.diagnostics;
    CHECK(d.back().l2_err < 1e-4);
    CHECK(std::abs(d.back().mass - d.front().mass) / d.front().mass < 1e-6);
    CHECK(result.final_state.samples.front() == complex(0.0, 0.0));
    CHECK(result.final_state.samples.back() == complex(0.0, 0.0));
}

TEST_CASE("evolution commutes with a Galilean boost") {
    const auto problem = cosh_problem();
    const double span = 40.0;
    const FieldGrid grid = SpectralGrid(2048, -span / 2, span / 2);
    // exp(i m v x / hbar) must be periodic on the box
    const double v = 2.0 * std::numbers::pi * 3.0 / span;

    const auto rest = models::sample_stationary(problem, grid, 0.0);
    evolve::EvolutionConfig config;
    config.dt = 1e-3;
    config.steps = 1000;

    const auto evolved_then_boosted =
        evolve::boost(evolve::evolve(problem, rest, config).final_state, v, problem.constants);
    const auto boosted_then_evolved =
        evolve::evolve(problem, evolve::boost(rest, v, problem.constants), config).final_state;
    CHECK(evolve::relative_l2_distance(boosted_then_evolved, evolved_then_boosted) < 1e-8);
}

TEST_CASE("boost carries momentum m v") {
    const models::ModelSpec spec{models::Cosh1D{1.0}, {2.0, 3.0}};
    const auto problem = models::make_problem(spec);
    const FieldGrid grid = SpectralGrid(2048, -40.0, 40.0);
    const auto psi = evolve::boost(problem, grid, 0.25, 0.0);
    const double p = evolve::momentum_expectation(psi, problem.constants) / mass(psi);
    CHECK(p == doctest::Approx(3.0 * 0.25).epsilon(1e-10));
}

TEST_CASE("head-on collision of two cosh solitons") {
    const models::ModelSpec spec{models::Cosh1D{1.0}, {}};
    evolve::EvolutionConfig config;
    config.dt = 1e-3;
    config.steps = 0;
    const auto r = evolve::collide(spec, 1.0, -1.0, 20.0, SpectralGrid(4096, -40.0, 40.0), config);
    CHECK_FALSE(r.inconclusive);
    CHECK(r.pre_correlation[0] > 0.999);
    CHECK(r.correlation > 0.999);
    CHECK(r.mass_drift < 1e-10);
    CHECK(r.final_time == doctest::Approx(20.0));
    CHECK(r.left_peak.back() < r.right_peak.back());
}

TEST_CASE("collision arguments are checked") {
    const models::ModelSpec spec{models::Cosh1D{1.0}, {}};
    const SpectralGrid grid(1024, -40.0, 40.0);
    CHECK_THROWS_AS(evolve::collide(spec, 1.0, 1.0, 20.0, grid, {}), DomainError);
    CHECK_THROWS_AS(evolve::collide(spec, 1.0, -1.0, 5.0, grid, {}), DomainError);
    CHECK_THROWS_AS(evolve::collide({models::PowerLaw{1.0, 0.5}, {}}, 1.0, -1.0, 20.0, grid, {}),
                    ConfigurationError);
}

TEST_CASE("non-finite fields abort with the last good state") {
    const auto problem = cosh_problem();
    const FieldGrid grid = SpectralGrid(256, -20.0, 20.0);
    auto psi = models::sample_stationary(problem, grid, 0.0);
    psi.samples[17] = complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
    evolve::EvolutionConfig config;
    config.steps = 10;
    try {
        evolve::evolve(problem, psi, config);
        FAIL("expected NumericalAbort");
    } catch (const evolve::NumericalAbort& e) {
        CHECK(e.last_good().samples.size() == 256);
    }
}

TEST_CASE("a field that turns non-finite mid-run aborts after the first bad step") {
    auto problem = cosh_problem();
    problem.nonlinearity.shape_fn = [](double phi) { return phi < 0.5 ? std::numeric_limits<double>::quiet_NaN() : -phi * phi; };
    const FieldGrid grid = SpectralGrid(256, -20.0, 20.0);
    const auto psi = models::sample_stationary(problem, grid, 0.0);
    evolve::EvolutionConfig config;
    config.dt = 0.01;
    config.steps = 50;
    try {
        evolve::evolve(problem, psi, config);
        FAIL("expected NumericalAbort");
    } catch (const evolve::NumericalAbort& e) {
        CHECK(e.last_good().time == 0.0);
        CHECK(e.last_good().samples == psi.samples);
        REQUIRE(e.diagnostics().size() == 1);
        CHECK(e.diagnostics().front().mass == doctest::Approx(1.0));
    }
}

TEST_CASE("one step on the stationary cosh field") {
    const auto problem = cosh_problem();
    const FieldGrid grid = SpectralGrid(1024, -30.0, 30.0);
    const auto psi = models::sample_stationary(problem, grid, 0.0);
    evolve::EvolutionConfig config;
    config.dt = 1e-3;
    const auto next = evolve::step(psi, problem, config);
    const complex expected_phase = std::polar(1.0, -problem.ground.energy * config.dt);
    double modulus = 0.0, phase = 0.0;
    for (std::size_t j = 0; j < psi.samples.size(); ++j) {
        modulus = std::max(modulus, std::abs(std::abs(next.samples[j]) - std::abs(psi.samples[j])));
        phase = std::max(phase, std::abs(next.samples[j] - psi.samples[j] * expected_phase));
    }
    CHECK(modulus < 1e-10);
    CHECK(phase < 1e-8);
    CHECK(next.time == config.dt);

    ComplexField zero{grid, std::vector<complex>(1024, 0.0), 0.0};
    for (const auto& z : evolve::step(zero, problem, config).samples) CHECK(z == complex(0.0, 0.0));
}

TEST_CASE("boosted field modulus is the translated profile") {
    const auto problem = cosh_problem();
    const FieldGrid grid = SpectralGrid(512, -20.0, 20.0);
    const auto psi = evolve::boost(problem, grid, 0.7, 2.0, 1.0);
    const auto x = grid_positions(grid);
    for (std::size_t j = 0; j < x.size(); ++j)
        CHECK(std::abs(psi.samples[j]) ==
              doctest::Approx(problem.ground.norm_const * problem.ground.profile(std::abs(x[j] - 1.0 - 1.4))));
    const auto rest = evolve::boost(problem, grid, 0.0, 0.0);
    const auto stationary = models::sample_stationary(problem, grid, 0.0);
    CHECK(evolve::relative_l2_distance(rest, stationary) < 1e-15);
}

TEST_CASE("configuration is validated") {
    const auto problem = cosh_problem();
    const FieldGrid periodic = SpectralGrid(256, -20.0, 20.0);
    const FieldGrid box = BoxGrid(257, -20.0, 20.0);
    evolve::EvolutionConfig config;
    config.dt = -1.0;
    CHECK_THROWS_AS(evolve::validate(config, periodic), ConfigurationError);
    config.dt = 1e-3;
    config.steps = 0;
    CHECK_THROWS_AS(evolve::validate(config, periodic), ConfigurationError);
    config.steps = 1;
    CHECK_THROWS_AS(evolve::validate(config, box), ConfigurationError);
    config.method = evolve::Method::CrankNicolson;
    CHECK_THROWS_AS(evolve::validate(config, periodic), ConfigurationError);

    CHECK_FALSE(evolve::evolvable({models::CoshND{1.0, 3}, {}}));
    CHECK_FALSE(evolve::evolvable({models::Coulomb{1.0}, {}}));
    CHECK_FALSE(evolve::evolvable({models::SoftenedDelta{1.0, 0.0}, {}}));
    CHECK(evolve::evolvable({models::Gausson{1.0, 1}, {}}));
    CHECK_THROWS_AS(evolve::require_evolvable({models::Gausson{1.0, 3}, {}}), ConfigurationError);

    const auto tan2 = models::make_problem({models::TanSquared{1.0, 2.0}, {}});
    CHECK_THROWS_AS(evolve::Stepper(tan2, SpectralGrid(256, -1.5, 1.5), {}), ConfigurationError);
}
