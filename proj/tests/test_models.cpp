#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nse/errors.hpp"
#include "nse/models.hpp"
#include "nse/numerics/quadrature.hpp"

using namespace nse;
using namespace nse::models;
using std::numbers::pi;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Largest radius sampled by the property checks: the support edge, or where
// phi0 has dropped to ~1e-6.
double sample_radius(const GroundState& g) {
    if (g.support.bounded()) return g.support.half_width;
    double r = g.length_scale;
    while (g.profile(r) > 1e-6) r *= 1.25;
    return r;
}

std::vector<ModelSpec> sweep() {
    std::vector<ModelSpec> specs;
    for (double w : {0.3, 1.0, 2.0, 5.0, 11.0})
        for (int n : {1, 2, 3}) specs.push_back({Gausson{w, n}, {}});
    for (double f : {0.1, 0.3, 0.5, 0.7, 0.9})
        specs.push_back({TrappedGausson{std::sqrt(f), std::sqrt(1.0 - f)}, {}});
    for (double a : {0.5, 1.0, 2.0, 3.0, 7.0}) {
        specs.push_back({Cosh1D{a}, {}});
        for (int n : {1, 2, 3, 4}) specs.push_back({CoshND{a, n}, {}});
        specs.push_back({Coulomb{a}, {}});
    }
    for (double l : {0.05, 0.3, 0.5, 1.0, 2.0, 5.0}) specs.push_back({PowerLaw{1.3, l}, {}});
    for (double b : {1.5, 2.0, 3.0, 7.0, 20.0}) specs.push_back({TanSquared{0.8, b}, {}});
    for (double b0 : {0.01, 0.1, 1.0, 3.0, 10.0}) specs.push_back({SoftenedDelta{1.0, b0}, {}});
    specs.push_back({Cosh1D{1.5}, {2.0, 0.7}});
    specs.push_back({Gausson{1.5, 3}, {0.5, 3.0}});
    specs.push_back({Coulomb{1.0}, {1.7, 0.4}});
    return specs;
}

double bessel_norm_const(double a, double b0) {
    const double z = 2.0 * b0 / a;
    return 1.0 / std::sqrt(2.0 * b0 * std::exp(z) * std::cyl_bessel_k(1.0, z));
}

}  // namespace

TEST_CASE("potential reference values") {
    CHECK(potential({Cosh1D{1.0}, {}}, 0.0) == doctest::Approx(2.0 * ground_state({Cosh1D{1.0}, {}}).energy));
    CHECK(potential({Cosh1D{2.0}, {1.5, 0.5}}, 0.0) == doctest::Approx(-1.5 * 1.5 / (0.5 * 4.0)));
    CHECK(potential({TanSquared{1.0, 2.0}, {}}, 0.0) == 0.0);
    CHECK(std::isinf(potential({TanSquared{1.0, 2.0}, {}}, 2.0)));
    CHECK(potential({Coulomb{1.0}, {}}, 0.0) == -INFINITY);
    for (double b0 : {0.1, 1.0, 4.0}) {
        const ModelSpec s{SoftenedDelta{2.0, b0}, {}};
        CHECK(potential(s, 0.0) == doctest::Approx(-(2.0 / b0 + 1.0) * std::abs(ground_state(s).energy)));
        CHECK(nonlinearity(s).shape(1.0) == doctest::Approx(-2.0 / b0 - 1.0));
    }
}

TEST_CASE("ground state reference values") {
    const auto c = ground_state({Cosh1D{2.0}, {}});
    CHECK(c.norm_const == doctest::Approx(0.5));
    CHECK(c.energy == doctest::Approx(-1.0 / 8.0));
    CHECK(ground_state({Gausson{1.3, 3}, {}}).energy == doctest::Approx(1.5 * 1.3));
    CHECK(ground_state({CoshND{1.5, 2}, {}}).norm_const == doctest::Approx(1.0 / (1.5 * std::sqrt(2.0 * pi * std::log(2.0)))));
    CHECK(ground_state({CoshND{1.0, 3}, {}}).norm_const == doctest::Approx(std::sqrt(3.0 / (pi * pi * pi))));
    CHECK(ground_state({TanSquared{1.0, 2.0}, {}}).energy == 1.0);

    for (double b0 : {1.0, 0.1, 5.0}) {
        const double c0 = ground_state({SoftenedDelta{1.0, b0}, {}}).norm_const;
        CHECK(rel(c0, bessel_norm_const(1.0, b0)) < 1e-10);
    }
    CHECK(ground_state({SoftenedDelta{2.0, 0.0}, {}}).norm_const == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("nonlinearity reference values") {
    const auto g = nonlinearity({Gausson{1.0, 3}, {}});
    CHECK(g.shape(1.0) == 0.0);
    double best = 0.0, at = 0.0;
    for (int i = 1; i < 100000; ++i) {
        const double phi = i * 1e-5;
        if (phi * g.shape(phi) > best) {
            best = phi * g.shape(phi);
            at = phi;
        }
    }
    CHECK(at == doctest::Approx(std::exp(-1.0)).epsilon(1e-4));

    CHECK(nonlinearity({Coulomb{1.0}, {}}).shape(std::exp(-0.5)) == doctest::Approx(-1.0));
    for (int n : {1, 2, 3, 5})
        CHECK(nonlinearity({CoshND{1.0, n}, {}}).shape(1.0 - 1e-12) == doctest::Approx(-(n + 1) / 2.0).epsilon(1e-9));
    CHECK(nonlinearity({TanSquared{1.0, 2.0}, {}}).shape(0.5) == doctest::Approx(2.0));
    CHECK(nonlinearity({TanSquared{1.0, 3.0}, {}}).shape(1.0) == 0.0);

    CHECK_THROWS_AS(g.shape(0.0), DomainError);
    CHECK_THROWS_AS(g.shape(1.5), DomainError);
    CHECK_THROWS_AS(nonlinearity({SoftenedDelta{1.0, 0.0}, {}}), DomainError);
}

TEST_CASE("quadrature normalization reference values") {
    CHECK(rel(norm_constant_numeric({Cosh1D{1.0}, {}}), 1.0 / std::sqrt(2.0)) < 1e-10);
    CHECK(rel(norm_constant_numeric({Gausson{1.0, 1}, {}}), std::pow(pi, -0.25)) < 1e-10);

    // 4 pi int r^2 sech^2 r dr = pi^3/3, checked against the sphere-surface integral directly
    const auto r2 = numerics::integrate_adaptive(
        [](double r) { return 4.0 * pi * r * r / std::pow(std::cosh(r), 2); }, 0.0, INFINITY, 1e-13);
    CHECK(rel(r2.value, pi * pi * pi / 3.0) < 1e-11);
    CHECK(rel(norm_constant_numeric({CoshND{1.0, 3}, {}}), 1.0 / std::sqrt(r2.value)) < 1e-9);
}

TEST_CASE("analytic and quadrature normalization agree over a parameter sweep") {
    for (const auto& spec : sweep()) {
        if (std::holds_alternative<SoftenedDelta>(spec.family)) continue;
        INFO(family_name(spec));
        CHECK(rel(norm_constant_numeric(spec), ground_state(spec).norm_const) < 1e-8);
    }
}

TEST_CASE("profiles start at 1 and decrease strictly") {
    for (const auto& spec : sweep()) {
        const auto g = ground_state(spec);
        INFO(family_name(spec));
        CHECK(g.profile(0.0) == 1.0);
        const double hi = sample_radius(g);
        const double edge = g.support.bounded() ? hi * (1.0 - 1e-9) : hi;
        double prev = 1.0;
        bool ok = true;
        for (int i = 1; i <= 1000; ++i) {
            const double p = g.profile(edge * i / 1000.0);
            ok = ok && p < prev && p >= 0.0;
            prev = p;
        }
        CHECK(ok);
    }
}

TEST_CASE("A G(phi0(r)) + U_ext(r) reproduces U(r)") {
    for (const auto& spec : sweep()) {
        const auto g = ground_state(spec);
        const auto f = nonlinearity(spec);
        const double hi = sample_radius(g);
        const double floor = std::abs(g.energy);
        double worst = 0.0;
        for (int i = 1; i <= 1000; ++i) {
            const double r = hi * i / 1001.0;
            const double u = potential(spec, r);
            worst = std::max(worst, std::abs(f.term(g.profile(r), r) - u) / std::max(std::abs(u), floor));
        }
        INFO(family_name(spec) << " " << worst);
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("power law at lambda = 1 is the cosh soliton") {
    for (double a : {0.5, 1.0, 2.5}) {
        const ModelSpec p{PowerLaw{a, 1.0}, {1.2, 0.8}};
        const ModelSpec c{Cosh1D{a}, {1.2, 0.8}};
        const auto gp = ground_state(p), gc = ground_state(c);
        CHECK(rel(gp.energy, gc.energy) < 1e-12);
        CHECK(rel(gp.norm_const, gc.norm_const) < 1e-12);
        const auto fp = nonlinearity(p), fc = nonlinearity(c);
        for (double x : {0.0, 0.3, 1.0, 4.0}) CHECK(rel(potential(p, x), potential(c, x)) < 1e-12);
        for (double phi : {0.01, 0.4, 1.0})
            CHECK(rel(fp.scale * fp.shape(phi), fc.scale * fc.shape(phi)) < 1e-12);
    }
}

TEST_CASE("CoshND with N = 1 is the cosh soliton") {
    const ModelSpec n1{CoshND{1.7, 1}, {}};
    const ModelSpec c{Cosh1D{1.7}, {}};
    CHECK(rel(ground_state(n1).norm_const, ground_state(c).norm_const) < 1e-14);
    const auto f1 = nonlinearity(n1), fc = nonlinearity(c);
    for (double x : {0.0, 0.5, 3.0}) CHECK(rel(potential(n1, x), potential(c, x)) < 1e-14);
    for (double phi : {0.05, 0.5, 0.99}) CHECK(rel(f1.scale * f1.shape(phi), fc.scale * fc.shape(phi)) < 1e-14);
}

TEST_CASE("trapped Gausson endpoints") {
    const auto pure_se = nonlinearity({TrappedGausson{1.0, 0.0}, {}});
    CHECK(pure_se.scale == 0.0);
    const auto free_gausson = nonlinearity({TrappedGausson{0.0, 1.0}, {}});
    CHECK(free_gausson.external(2.0) == 0.0);
    CHECK(free_gausson.scale == doctest::Approx(nonlinearity({Gausson{1.0, 3}, {}}).scale));
    CHECK_THROWS_AS(validate({TrappedGausson{0.0, 0.0}, {}}), DomainError);
}

TEST_CASE("sample_stationary") {
    const ModelSpec spec{Cosh1D{1.0}, {}};
    const auto g = ground_state(spec);
    const FieldGrid grid = numerics::SpectralGrid(64, -10.0, 10.0);
    const auto psi0 = sample_stationary(spec, grid, 0.0);
    for (const auto& z : psi0.samples) {
        CHECK(z.imag() == 0.0);
        CHECK(z.real() > 0.0);
    }
    CHECK(std::abs(psi0.samples[32]) == doctest::Approx(g.norm_const));
    const auto flipped = sample_stationary(spec, grid, pi / g.energy);
    for (std::size_t j = 0; j < 64; ++j) CHECK(std::abs(flipped.samples[j] + psi0.samples[j]) < 1e-14);

    CHECK_THROWS_AS(sample_stationary({TanSquared{1.0, 2.0}, {}}, BoxGrid(65, -2.0, 2.0), 0.0), DomainError);
    CHECK_THROWS_AS(sample_stationary({Gausson{1.0, 3}, {}}, grid, 0.0), DomainError);
}

TEST_CASE("validation and parsing") {
    CHECK_THROWS_AS(validate({Cosh1D{0.0}, {}}), DomainError);
    CHECK_THROWS_AS(validate({TanSquared{1.0, 1.0}, {}}), DomainError);
    CHECK_THROWS_AS(validate({PowerLaw{1.0, -1.0}, {}}), DomainError);
    CHECK_THROWS_AS(validate({Gausson{1.0, 0}, {}}), DomainError);
    CHECK_THROWS_AS(validate({Cosh1D{1.0}, {0.0, 1.0}}), DomainError);
    CHECK_THROWS_AS(validate({SoftenedDelta{1.0, -0.1}, {}}), DomainError);

    CHECK(family_names().size() == 8);
    const auto s = make_spec("coshNd", {{"a", 2.0}, {"N", 2.0}, {"hbar", 3.0}});
    CHECK(family_name(s) == "coshNd");
    CHECK(dimension(s) == 2);
    CHECK(std::get<CoshND>(s.family).a == 2.0);
    CHECK(s.constants.hbar == 3.0);
    CHECK(parameters(s).at("a") == 2.0);
}
