#include "nse/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nse/errors.hpp"
#include "nse/numerics/quadrature.hpp"
#include "nse/numerics/roots.hpp"
#include "nse/numerics/special.hpp"

namespace nse::models {

namespace {

using std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double inf = std::numeric_limits<double>::infinity();

/// ln cosh y without overflow; cosh y - 1 = 2 sinh^2(y/2) keeps small y accurate.
double log_cosh(double y) {
    const double ay = std::abs(y);
    if (ay < 1.0) {
        const double sh = std::sinh(0.5 * ay);
        return std::log1p(2.0 * sh * sh);
    }
    return ay + std::log1p(std::exp(-2.0 * ay)) - std::numbers::ln2;
}

double sech_squared(double y) {
    const double c = std::cosh(y);
    return 1.0 / (c * c);
}

/// tanh(y)/y with the removable singularity filled in.
double tanh_over(double y) {
    if (std::abs(y) < 1e-5) return 1.0 - y * y / 3.0;
    return std::tanh(y) / y;
}

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(std::string("invalid model parameters: ") + what);
}

double zero_potential(double) { return 0.0; }

/// sqrt(1-phi^2) / arcosh(1/phi), continued to phi > 1 as sqrt(phi^2-1)/arccos(1/phi).
double cosh_nd_ratio(double phi) {
    const double gap = 1.0 - phi;
    if (std::abs(gap) < 1e-8) return 1.0 - 2.0 * gap / 3.0;
    if (phi < 1.0) {
        const double s = std::sqrt(gap * (1.0 + phi));
        return s / (std::log1p(s) - std::log(phi));
    }
    const double s = std::sqrt((phi - 1.0) * (phi + 1.0));
    return s / std::atan(s);
}

double cosh_nd_norm_const(const CoshND& m) {
    const int n = m.dimension;
    const double a = m.a;
    if (n == 1) return 1.0 / std::sqrt(2.0 * a);
    if (n == 2) return 1.0 / (a * std::sqrt(2.0 * pi * std::numbers::ln2));
    const double log_c0_sq = (n - 1) * std::log(4.0) + numerics::log_gamma(0.5 * n + 1.0) -
                             std::log(std::ldexp(1.0, n) - 4.0) - std::log(static_cast<double>(n)) -
                             numerics::log_gamma(static_cast<double>(n)) - 0.5 * n * std::log(pi) -
                             std::log(numerics::zeta(n - 1.0)) - n * std::log(a);
    return std::exp(0.5 * log_c0_sq);
}

struct Catalog {
    const PhysicalConstants& k;

    // ---- potentials ----
    double u(const Gausson& m, double r) const { return 0.5 * k.mass * m.omega * m.omega * r * r; }
    double u(const TrappedGausson& m, double r) const {
        return 0.5 * k.mass * (m.omega1 * m.omega1 + m.omega2 * m.omega2) * r * r;
    }
    double u(const Cosh1D& m, double x) const {
        return -k.hbar * k.hbar / (k.mass * m.a * m.a) * sech_squared(x / m.a);
    }
    double u(const CoshND& m, double r) const {
        const double y = std::abs(r) / m.a;
        const double e = k.hbar * k.hbar / (k.mass * m.a * m.a);
        return -e * sech_squared(y) - (m.dimension - 1) * 0.5 * e * tanh_over(y);
    }
    double u(const PowerLaw& m, double x) const {
        const double l = m.lambda;
        return -(1.0 + l) / (2.0 * l * l) * k.hbar * k.hbar / (k.mass * m.a * m.a) * sech_squared(x / m.a);
    }
    double u(const TanSquared& m, double x) const {
        if (std::abs(x) >= 0.5 * pi * m.L) return inf;
        const double t = std::tan(x / m.L);
        return k.hbar * k.hbar / (2.0 * k.mass * m.L * m.L) * m.beta * (m.beta - 1.0) * t * t;
    }
    double u(const SoftenedDelta& m, double x) const {
        if (m.b0 == 0.0) return x == 0.0 ? -inf : 0.0;
        const double rho_sq = x * x + m.b0 * m.b0;
        const double rho = std::sqrt(rho_sq);
        return -k.hbar * k.hbar * m.b0 * m.b0 / (2.0 * m.a * k.mass) * (1.0 / (rho_sq * rho) + 1.0 / (m.a * rho_sq));
    }
    double u(const Coulomb& m, double r) const {
        if (r == 0.0) return -inf;
        return -k.hbar * k.hbar / (m.bohr_radius * k.mass * std::abs(r));
    }

    // ---- ground states ----
    GroundState gaussian(double omega, int n) const {
        const double b = std::sqrt(2.0 * k.hbar / (k.mass * omega));
        GroundState g;
        g.profile = [b](double r) { return std::exp(-(r * r) / (b * b)); };
        g.slope = [b](double r) { return -2.0 * r / (b * b) * std::exp(-(r * r) / (b * b)); };
        g.energy = 0.5 * n * k.hbar * omega;
        g.norm_const = std::pow(k.mass * omega / (pi * k.hbar), 0.25 * n);
        g.length_scale = b;
        g.dimension = n;
        return g;
    }
    GroundState sech(double a, double norm, double energy, int n) const {
        GroundState g;
        g.profile = [a](double r) { return 1.0 / std::cosh(r / a); };
        g.slope = [a](double r) { return -std::tanh(r / a) / (a * std::cosh(r / a)); };
        g.energy = energy;
        g.norm_const = norm;
        g.length_scale = a;
        g.dimension = n;
        return g;
    }

    GroundState gs(const Gausson& m) const { return gaussian(m.omega, m.dimension); }
    GroundState gs(const TrappedGausson& m) const {
        return gaussian(std::hypot(m.omega1, m.omega2), 3);
    }
    GroundState gs(const Cosh1D& m) const {
        return sech(m.a, 1.0 / std::sqrt(2.0 * m.a), -k.hbar * k.hbar / (2.0 * k.mass * m.a * m.a), 1);
    }
    GroundState gs(const CoshND& m) const {
        return sech(m.a, cosh_nd_norm_const(m), -k.hbar * k.hbar / (2.0 * k.mass * m.a * m.a), m.dimension);
    }
    GroundState gs(const PowerLaw& m) const {
        const double a = m.a;
        const double l = m.lambda;
        GroundState g;
        g.profile = [a, l](double x) { return std::exp(-log_cosh(x / a) / l); };
        g.slope = [a, l](double x) { return -std::tanh(x / a) / (l * a) * std::exp(-log_cosh(x / a) / l); };
        g.energy = -k.hbar * k.hbar / (2.0 * k.mass * a * a * l * l);
        g.norm_const = std::sqrt(std::exp(numerics::log_gamma(0.5 + 1.0 / l) - numerics::log_gamma(1.0 / l)) /
                                 (std::sqrt(pi) * a));
        g.length_scale = a;
        g.dimension = 1;
        return g;
    }
    GroundState gs(const TanSquared& m) const {
        const double L = m.L;
        const double beta = m.beta;
        const double wall = 0.5 * pi * L;
        GroundState g;
        g.profile = [=](double x) {
            if (std::abs(x) >= wall) return 0.0;
            return std::pow(std::max(0.0, std::cos(x / L)), beta);
        };
        g.slope = [=](double x) {
            if (std::abs(x) >= wall) return 0.0;
            const double c = std::max(0.0, std::cos(x / L));
            return -beta / L * std::sin(x / L) * std::pow(c, beta - 1.0);
        };
        g.energy = k.hbar * k.hbar * beta / (2.0 * k.mass * L * L);
        g.norm_const = std::sqrt(std::exp(std::log(beta) + numerics::log_gamma(beta) - numerics::log_gamma(beta + 0.5)) /
                                 (std::sqrt(pi) * L));
        g.length_scale = L;
        g.support.half_width = wall;
        g.dimension = 1;
        return g;
    }
    GroundState gs(const SoftenedDelta& m) const {
        const double a = m.a;
        const double b0 = m.b0;
        GroundState g;
        // (rho - b0) written as x^2/(rho + b0) to stay accurate when x << b0.
        g.profile = [a, b0](double x) {
            const double rho = std::hypot(x, b0);
            const double excess = rho + b0 > 0.0 ? x * x / (rho + b0) : 0.0;
            return std::exp(-excess / a);
        };
        g.slope = [a, b0](double x) {
            const double rho = std::hypot(x, b0);
            const double excess = rho + b0 > 0.0 ? x * x / (rho + b0) : 0.0;
            const double direction = rho > 0.0 ? x / rho : 1.0;
            return -direction / a * std::exp(-excess / a);
        };
        g.energy = -k.hbar * k.hbar / (2.0 * a * a * k.mass);
        g.length_scale = a;
        g.dimension = 1;
        g.norm_const = b0 == 0.0 ? 1.0 / std::sqrt(a) : norm_constant_numeric(g);
        return g;
    }
    GroundState gs(const Coulomb& m) const {
        const double ab = m.bohr_radius;
        GroundState g;
        g.profile = [ab](double r) { return std::exp(-std::abs(r) / ab); };
        g.slope = [ab](double r) { return -std::exp(-std::abs(r) / ab) / ab; };
        g.energy = -k.hbar * k.hbar / (2.0 * ab * ab * k.mass);
        g.norm_const = 1.0 / std::sqrt(pi * ab * ab * ab);
        g.length_scale = ab;
        g.dimension = 3;
        return g;
    }

    // ---- nonlinearities ----
    static Nonlinearity logarithmic(double scale, std::function<double(double)> external, std::string note) {
        Nonlinearity f;
        f.scale = scale;
        f.shape_fn = [](double phi) { return -2.0 * std::log(phi); };
        f.external = std::move(external);
        f.domain_note = std::move(note);
        return f;
    }

    Nonlinearity nl(const Gausson& m) const {
        return logarithmic(0.5 * k.hbar * m.omega, zero_potential,
                           "G(phi) = -ln phi^2; diverges as phi->0+ (phi G -> 0), G(1) = 0");
    }
    Nonlinearity nl(const TrappedGausson& m) const {
        const double omega = std::hypot(m.omega1, m.omega2);
        const double trap = 0.5 * k.mass * m.omega1 * m.omega1;
        return logarithmic(k.hbar * m.omega2 * m.omega2 / (2.0 * omega), [trap](double r) { return trap * r * r; },
                           "G(phi) = -ln phi^2 plus external trap m omega1^2 r^2 / 2");
    }
    Nonlinearity nl(const Cosh1D& m) const {
        Nonlinearity f;
        f.scale = k.hbar * k.hbar / (k.mass * m.a * m.a);
        f.shape_fn = [](double phi) { return -phi * phi; };
        f.external = zero_potential;
        f.domain_note = "G(phi) = -phi^2; regular on [0, 1]";
        return f;
    }
    Nonlinearity nl(const CoshND& m) const {
        Nonlinearity f;
        const double half_n_minus_1 = 0.5 * (m.dimension - 1);
        // The scale carries energy dimension: A G(phi0(r)) must reproduce U(r).
        f.scale = k.hbar * k.hbar / (k.mass * m.a * m.a);
        f.shape_fn = [half_n_minus_1](double phi) { return -phi * phi - half_n_minus_1 * cosh_nd_ratio(phi); };
        f.external = zero_potential;
        f.domain_note = "G -> 0 as phi->0+, G -> -(N+1)/2 as phi->1-";
        return f;
    }
    Nonlinearity nl(const PowerLaw& m) const {
        Nonlinearity f;
        const double l = m.lambda;
        f.scale = (1.0 + l) / (2.0 * l * l) * k.hbar * k.hbar / (k.mass * m.a * m.a);
        f.shape_fn = [l](double phi) { return -std::pow(phi, 2.0 * l); };
        f.external = zero_potential;
        f.domain_note = "G(phi) = -phi^(2 lambda); regular on [0, 1]";
        return f;
    }
    Nonlinearity nl(const TanSquared& m) const {
        Nonlinearity f;
        const double beta = m.beta;
        f.scale = k.hbar * k.hbar / (2.0 * k.mass * m.L * m.L);
        f.shape_fn = [beta](double phi) { return beta * (beta - 1.0) * std::expm1(-2.0 / beta * std::log(phi)); };
        f.external = zero_potential;
        f.domain_note = "G(phi) = beta(beta-1)(phi^(-2/beta) - 1); diverges as phi->0+, G(1) = 0";
        return f;
    }
    Nonlinearity nl(const SoftenedDelta& m) const {
        if (!(m.b0 > 0.0))
            throw DomainError("softened-delta nonlinearity needs b0 > 0 (b0 = 0 is a delta-function limit)");
        Nonlinearity f;
        const double c = m.b0 / m.a;
        f.scale = k.hbar * k.hbar / (2.0 * k.mass * m.a * m.a);
        f.shape_fn = [c](double phi) {
            const double l = std::log(phi) - c;
            return c * c * (1.0 - l) / (l * l * l);
        };
        f.external = zero_potential;
        f.domain_note = "G -> 0 as phi->0+, G(1) = -a/b0 - 1";
        return f;
    }
    Nonlinearity nl(const Coulomb& m) const {
        Nonlinearity f;
        f.scale = 2.0 * k.hbar * k.hbar / (k.mass * m.bohr_radius * m.bohr_radius);
        f.shape_fn = [](double phi) { return 1.0 / (2.0 * std::log(phi)); };
        f.external = zero_potential;
        f.domain_note = "G(phi) = 1/ln phi^2 < 0; diverges as phi->1-";
        return f;
    }
};

double radius_where(const GroundState& g, double target) {
    double hi = g.support.bounded() ? g.support.half_width : g.length_scale;
    if (!g.support.bounded()) {
        for (int i = 0; i < 64 && g.profile(hi) > target; ++i) hi *= 2.0;
    }
    if (g.profile(hi) > target) return hi;
    return numerics::invert_monotone(g.profile, target, 0.0, hi, 1e-13 * g.length_scale);
}

}  // namespace

double Nonlinearity::shape(double phi) const {
    if (!(phi > 0.0 && phi <= 1.0)) {
        std::ostringstream msg;
        msg << "nonlinearity shape evaluated at phi = " << phi << " outside (0, 1]";
        throw DomainError(msg.str());
    }
    return shape_fn(phi);
}

std::string family_name(const ModelSpec& spec) {
    return std::visit(overloaded{[](const Gausson&) { return "gausson"; },
                                 [](const TrappedGausson&) { return "trapped-gausson"; },
                                 [](const Cosh1D&) { return "cosh1d"; },
                                 [](const CoshND&) { return "coshNd"; },
                                 [](const PowerLaw&) { return "power-law"; },
                                 [](const TanSquared&) { return "tan2"; },
                                 [](const SoftenedDelta&) { return "softened-delta"; },
                                 [](const Coulomb&) { return "coulomb"; }},
                      spec.family);
}

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names{"gausson", "trapped-gausson", "cosh1d", "coshNd",
                                                "power-law", "tan2", "softened-delta", "coulomb"};
    return names;
}

int dimension(const ModelSpec& spec) {
    return std::visit(overloaded{[](const Gausson& m) { return m.dimension; },
                                 [](const TrappedGausson&) { return 3; },
                                 [](const CoshND& m) { return m.dimension; },
                                 [](const Coulomb&) { return 3; },
                                 [](const auto&) { return 1; }},
                      spec.family);
}

std::map<std::string, double> parameters(const ModelSpec& spec) {
    std::map<std::string, double> p{{"hbar", spec.constants.hbar}, {"mass", spec.constants.mass}};
    std::visit(overloaded{[&](const Gausson& m) {
                              p["omega"] = m.omega;
                              p["N"] = m.dimension;
                          },
                          [&](const TrappedGausson& m) {
                              p["omega1"] = m.omega1;
                              p["omega2"] = m.omega2;
                              p["N"] = 3;
                          },
                          [&](const Cosh1D& m) { p["a"] = m.a; },
                          [&](const CoshND& m) {
                              p["a"] = m.a;
                              p["N"] = m.dimension;
                          },
                          [&](const PowerLaw& m) {
                              p["a"] = m.a;
                              p["lambda"] = m.lambda;
                          },
                          [&](const TanSquared& m) {
                              p["L"] = m.L;
                              p["beta"] = m.beta;
                          },
                          [&](const SoftenedDelta& m) {
                              p["a"] = m.a;
                              p["b0"] = m.b0;
                          },
                          [&](const Coulomb& m) {
                              p["aB"] = m.bohr_radius;
                              p["N"] = 3;
                          }},
               spec.family);
    return p;
}

void validate(const ModelSpec& spec) {
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    require(positive(spec.constants.hbar) && positive(spec.constants.mass), "hbar and mass must be positive");
    std::visit(overloaded{[&](const Gausson& m) {
                              require(positive(m.omega), "omega > 0");
                              require(m.dimension >= 1, "N >= 1");
                          },
                          [&](const TrappedGausson& m) {
                              require(std::isfinite(m.omega1) && std::isfinite(m.omega2) && m.omega1 >= 0.0 &&
                                          m.omega2 >= 0.0,
                                      "omega1, omega2 >= 0");
                              require(m.omega1 > 0.0 || m.omega2 > 0.0, "omega1^2 + omega2^2 > 0");
                          },
                          [&](const Cosh1D& m) { require(positive(m.a), "a > 0"); },
                          [&](const CoshND& m) {
                              require(positive(m.a), "a > 0");
                              require(m.dimension >= 1, "N >= 1");
                          },
                          [&](const PowerLaw& m) {
                              require(positive(m.a), "a > 0");
                              require(positive(m.lambda), "lambda > 0");
                          },
                          [&](const TanSquared& m) {
                              require(positive(m.L), "L > 0");
                              require(std::isfinite(m.beta) && m.beta > 1.0, "beta > 1");
                          },
                          [&](const SoftenedDelta& m) {
                              require(positive(m.a), "a > 0");
                              require(std::isfinite(m.b0) && m.b0 >= 0.0, "b0 >= 0");
                          },
                          [&](const Coulomb& m) { require(positive(m.bohr_radius), "aB > 0"); }},
               spec.family);
}

double potential(const ModelSpec& spec, double r) {
    validate(spec);
    const Catalog cat{spec.constants};
    return std::visit([&](const auto& m) { return cat.u(m, r); }, spec.family);
}

GroundState ground_state(const ModelSpec& spec) {
    validate(spec);
    const Catalog cat{spec.constants};
    return std::visit([&](const auto& m) { return cat.gs(m); }, spec.family);
}

Nonlinearity nonlinearity(const ModelSpec& spec) {
    validate(spec);
    const Catalog cat{spec.constants};
    return std::visit([&](const auto& m) { return cat.nl(m); }, spec.family);
}

double norm_constant_numeric(const GroundState& g) {
    const int n = g.dimension;
    const double area = numerics::unit_sphere_area(n);
    auto integrand = [&](double r) {
        const double phi = g.profile(r);
        return area * std::pow(r, n - 1) * phi * phi;
    };
    // Split at the half-height and tail radii so narrow cores are resolved.
    std::vector<double> breaks{0.0};
    for (double level : {0.5, 1e-3}) {
        const double r = radius_where(g, level);
        if (r > breaks.back() && (!g.support.bounded() || r < g.support.half_width)) breaks.push_back(r);
    }
    breaks.push_back(g.support.bounded() ? g.support.half_width : inf);
    numerics::QuadratureOptions opts;
    opts.rel_tol = 1e-13;
    const auto q = numerics::integrate_piecewise(integrand, breaks, opts);
    return 1.0 / std::sqrt(q.value);
}

double norm_constant_numeric(const ModelSpec& spec) { return norm_constant_numeric(ground_state(spec)); }

SolvableProblem make_problem(const ModelSpec& spec) {
    validate(spec);
    SolvableProblem p;
    p.family = family_name(spec);
    p.params = parameters(spec);
    p.constants = spec.constants;
    p.potential = [spec](double r) {
        const Catalog cat{spec.constants};
        return std::visit([&](const auto& m) { return cat.u(m, r); }, spec.family);
    };
    p.ground = ground_state(spec);
    const auto* delta = std::get_if<SoftenedDelta>(&spec.family);
    if (delta == nullptr || delta->b0 > 0.0) p.nonlinearity = nonlinearity(spec);
    return p;
}

ComplexField sample_stationary(const SolvableProblem& problem, const FieldGrid& grid, double t) {
    const auto& g = problem.ground;
    if (g.dimension != 1) throw DomainError("sample_stationary: one-dimensional families only");
    const auto x = grid_positions(grid);
    if (g.support.bounded()) {
        const double edge = std::max(std::abs(x.front()), std::abs(x.back()));
        if (edge > g.support.half_width * (1.0 + 1e-12))
            throw DomainError("sample_stationary: grid extends beyond the infinite walls");
    }
    ComplexField field{grid, std::vector<complex>(x.size()), t};
    const complex phase = std::polar(1.0, -g.energy * t / problem.constants.hbar);
    for (std::size_t j = 0; j < x.size(); ++j) field.samples[j] = g.norm_const * g.profile(std::abs(x[j])) * phase;
    return field;
}

ComplexField sample_stationary(const ModelSpec& spec, const FieldGrid& grid, double t) {
    return sample_stationary(make_problem(spec), grid, t);
}

ModelSpec make_spec(std::string_view family, const std::map<std::string, double>& params) {
    auto get = [&](const char* key, double fallback) {
        const auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    };
    auto get_dim = [&](int fallback) { return static_cast<int>(std::lround(get("N", fallback))); };

    ModelSpec spec;
    spec.constants.hbar = get("hbar", 1.0);
    spec.constants.mass = get("mass", 1.0);
    if (family == "gausson")
        spec.family = Gausson{get("omega", 1.0), get_dim(3)};
    else if (family == "trapped-gausson")
        spec.family = TrappedGausson{get("omega1", TrappedGausson{}.omega1), get("omega2", TrappedGausson{}.omega2)};
    else if (family == "cosh1d")
        spec.family = Cosh1D{get("a", 1.0)};
    else if (family == "coshNd")
        spec.family = CoshND{get("a", 1.0), get_dim(3)};
    else if (family == "power-law")
        spec.family = PowerLaw{get("a", 1.0), get("lambda", 1.0)};
    else if (family == "tan2")
        spec.family = TanSquared{get("L", 1.0), get("beta", 2.0)};
    else if (family == "softened-delta")
        spec.family = SoftenedDelta{get("a", 1.0), get("b0", 1.0)};
    else if (family == "coulomb")
        spec.family = Coulomb{get("aB", 1.0)};
    else
        throw ConfigurationError("unknown model family '" + std::string(family) + "'");
    validate(spec);
    return spec;
}

}  // namespace nse::models
