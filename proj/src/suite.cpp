#include "nse/suite.hpp"

#include <omp.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "nse/construct.hpp"
#include "nse/errors.hpp"
#include "nse/kernels.hpp"

namespace nse::suite {

namespace {

using std::numbers::pi;

std::string with_params(const std::string& prefix, const models::ModelSpec& spec) {
    std::ostringstream s;
    s << prefix << "/" << models::family_name(spec);
    std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, models::Gausson> || std::is_same_v<T, models::CoshND>)
                s << "/N=" << f.dimension;
            else if constexpr (std::is_same_v<T, models::PowerLaw>)
                s << "/lambda=" << f.lambda;
            else if constexpr (std::is_same_v<T, models::TanSquared>)
                s << "/beta=" << f.beta;
            else if constexpr (std::is_same_v<T, models::SoftenedDelta>)
                s << "/b0=" << f.b0;
        },
        spec.family);
    return s.str();
}

report::CaseReport limit_record(const verify::LimitReport& limit, const models::ModelSpec& spec) {
    return report::from_limit(limit, models::family_name(spec), models::parameters(spec));
}

double softened_delta_norm_const(double a, double b0) {
    if (b0 == 0.0) return 1.0 / std::sqrt(a);
    const double z = 2.0 * b0 / a;
    return 1.0 / std::sqrt(2.0 * b0 * std::exp(z) * std::cyl_bessel_k(1.0, z));
}

}  // namespace

std::vector<models::ModelSpec> certification_specs() {
    using namespace models;
    std::vector<ModelSpec> specs;
    for (int n : {1, 2, 3}) specs.push_back({Gausson{1.0, n}, {}});
    specs.push_back({TrappedGausson{}, {}});
    specs.push_back({Cosh1D{1.0}, {}});
    for (int n : {1, 2, 3}) specs.push_back({CoshND{1.0, n}, {}});
    for (double lambda : {0.5, 1.0, 2.0}) specs.push_back({PowerLaw{1.0, lambda}, {}});
    specs.push_back({TanSquared{1.0, 2.0}, {}});
    specs.push_back({SoftenedDelta{1.0, 1.0}, {}});
    specs.push_back({Coulomb{1.0}, {}});
    return specs;
}

ResidualSetup residual_setup(const models::ModelSpec& spec) {
    const auto g = models::ground_state(spec);
    const double l = g.length_scale;
    return std::visit(
        [&](const auto& f) -> ResidualSetup {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, models::Gausson>) {
                if (f.dimension == 1) return {{-8.0 * l, 8.0 * l}, 32769};
                return {{1e-3 * l, 8.0 * l}, 16385};
            } else if constexpr (std::is_same_v<T, models::TrappedGausson>) {
                return {{1e-3 * l, 8.0 * l}, 16385};
            } else if constexpr (std::is_same_v<T, models::Cosh1D>) {
                return {{-20.0 * l, 20.0 * l}, 65537};
            } else if constexpr (std::is_same_v<T, models::CoshND>) {
                if (f.dimension == 1) return {{-20.0 * l, 20.0 * l}, 65537};
                return {{1e-3 * l, 20.0 * l}, 32769};
            } else if constexpr (std::is_same_v<T, models::PowerLaw>) {
                const double w = 20.0 * l * std::max(1.0, f.lambda);
                return {{-w, w}, 65537};
            } else if constexpr (std::is_same_v<T, models::TanSquared>) {
                return {{-g.support.half_width, g.support.half_width}, 8193};
            } else if constexpr (std::is_same_v<T, models::SoftenedDelta>) {
                return {{-30.0 * l, 30.0 * l}, 65537};
            } else {
                return {{0.05 * l, 30.0 * l}, 65537};
            }
        },
        spec.family);
}

std::vector<report::CaseReport> residual_cases(const models::ModelSpec& spec,
                                               const std::optional<ResidualSetup>& setup) {
    const auto problem = models::make_problem(spec);
    const auto s = setup ? *setup : residual_setup(spec);
    std::vector<report::CaseReport> out;
    const auto base = verify::residual_stationary(problem, s.window, s.points);
    out.push_back(report::from_residual(with_params("residual", spec), base, residual_tolerance));
    verify::Perturbation wrong_energy;
    wrong_energy.energy = 1.01;
    const auto control = verify::residual_stationary(problem, s.window, s.points, wrong_energy);
    out.push_back(report::from_negative_control(with_params("residual-control/E0x1.01", spec), control,
                                                negative_control_floor));
    return out;
}

std::vector<report::CaseReport> invert_cases(const models::ModelSpec& spec) {
    const auto synth = construct::synthesize(spec);
    report::CaseReport r;
    r.case_id = with_params("invert", spec);
    r.family = models::family_name(spec);
    r.params = models::parameters(spec);
    r.measured = synth.deviation_vs_analytic;
    r.rel_dev = synth.deviation_vs_analytic;
    r.tolerance = construction_tolerance;
    r.pass = synth.deviation_vs_analytic < construction_tolerance;
    std::ostringstream notes;
    notes << "max relative deviation of synthesized G over " << synth.phi.size() << " phi samples in ["
          << synth.phi.front() << ", " << synth.phi.back() << "]";
    if (synth.range_shrunk) notes << "; window shrunk";
    r.notes = notes.str();
    return {r};
}

std::vector<report::CaseReport> norm_cases(const models::ModelSpec& spec) {
    const auto g = models::ground_state(spec);
    const double numeric = models::norm_constant_numeric(spec);
    if (const auto* sd = std::get_if<models::SoftenedDelta>(&spec.family)) {
        const double closed = softened_delta_norm_const(sd->a, sd->b0);
        return {limit_record(verify::make_limit_report(with_params("norm", spec), numeric, closed, norm_tolerance,
                                                       "quadrature c0 vs. Bessel-K closed form"),
                             spec)};
    }
    return {limit_record(
        verify::make_limit_report(with_params("norm", spec), numeric, g.norm_const, norm_tolerance,
                                  "quadrature c0 vs. analytic c0"),
        spec)};
}

std::vector<report::CaseReport> uncertainty_cases(double a, double lambda, const models::PhysicalConstants& k) {
    const models::ModelSpec spec{models::PowerLaw{a, lambda}, k};
    const auto u = verify::uncertainty(spec);
    std::vector<report::CaseReport> out;
    std::ostringstream id;
    id << "uncertainty/lambda=" << lambda;

    auto heis = verify::make_limit_report(id.str() + "/heisenberg", u.product_over_hbar, 0.5, 0.0,
                                          "dx dp / hbar must exceed 1/2");
    heis.rel_dev = u.product_over_hbar - 0.5;
    heis.passed = u.product_over_hbar > 0.5;
    out.push_back(limit_record(heis, spec));
    if (lambda <= 0.1) {
        out.push_back(limit_record(verify::make_limit_report(id.str() + "/delta-x", u.delta_x,
                                                             a * std::sqrt(lambda / 2.0), 0.02,
                                                             "small-lambda asymptote a sqrt(lambda/2)"),
                                   spec));
        out.push_back(limit_record(verify::make_limit_report(id.str() + "/delta-p", u.delta_p,
                                                             k.hbar / (a * std::sqrt(2.0 * lambda)), 0.02,
                                                             "small-lambda asymptote hbar/(a sqrt(2 lambda))"),
                                   spec));
    }
    if (lambda <= 0.01)
        out.push_back(limit_record(verify::make_limit_report(id.str() + "/kinetic-ratio", u.kinetic_ratio,
                                                             lambda / 2.0, 0.05, "<E_kin>/|E0| vs. lambda/2"),
                                   spec));
    if (lambda == 1.0)
        out.push_back(limit_record(verify::make_limit_report(id.str() + "/closed-product", u.product_over_hbar,
                                                             pi / 6.0, 1e-6, "sech profile: dx dp = pi hbar/6"),
                                   spec));
    return out;
}

const std::vector<std::string>& limit_case_names() {
    static const std::vector<std::string> names{"softened-delta", "delta", "tan2", "trapped-gausson", "power-law"};
    return names;
}

std::vector<report::CaseReport> limit_cases(const std::string& name, const LimitOptions& options) {
    std::vector<report::CaseReport> out;
    const auto push_all = [&](const std::vector<verify::LimitReport>& limits, const models::ModelSpec& spec) {
        for (const auto& l : limits) out.push_back(limit_record(l, spec));
    };
    if (name == "softened-delta") {
        std::vector<std::pair<double, double>> potential_sets{{1.0, 1.0}, {1.0, 1e-3}, {2.0, 0.5}};
        std::vector<std::pair<double, double>> g_sets{{1.0, 1.0}, {1.0, 10.0}, {1.0, 1e-3}};
        if (options.a || options.b0) {
            const std::pair<double, double> p{options.a.value_or(1.0), options.b0.value_or(1.0)};
            potential_sets = {p};
            g_sets = {p};
        }
        for (const auto& [a, b0] : potential_sets) {
            const models::ModelSpec spec{models::SoftenedDelta{a, b0}, {}};
            out.push_back(limit_record(verify::limit_softened_delta_potential_integral(a, b0), spec));
        }
        for (const auto& [a, b0] : g_sets) {
            const models::ModelSpec spec{models::SoftenedDelta{a, b0}, {}};
            out.push_back(limit_record(verify::limit_softened_delta_G_integral(a, b0), spec));
        }
    } else if (name == "delta") {
        const double a = options.a.value_or(1.0);
        push_all(verify::limit_delta_cusp(a), models::ModelSpec{models::SoftenedDelta{a, 0.0}, {}});
    } else if (name == "tan2") {
        const double L = options.L.value_or(1.0);
        push_all(verify::limit_tan2({1e3, 1.0 + 1e-6}, L), models::ModelSpec{models::TanSquared{L, 2.0}, {}});
    } else if (name == "trapped-gausson") {
        const double omega = options.omega.value_or(1.0);
        push_all(verify::limit_trapped_gausson(omega, {0.1, 0.5, 0.9}),
                 models::ModelSpec{models::TrappedGausson{omega / std::sqrt(2.0), omega / std::sqrt(2.0)}, {}});
    } else if (name == "power-law") {
        const double a = options.a.value_or(1.0);
        push_all(verify::localization_scan(a, {1.0, 0.3, 0.1, 0.03, 0.01}),
                 models::ModelSpec{models::PowerLaw{a, 1.0}, {}});
    } else {
        throw ConfigurationError("unknown limit case '" + name + "'");
    }
    return out;
}

std::vector<report::CaseReport> all_cases() {
    using Task = std::function<std::vector<report::CaseReport>()>;
    std::vector<Task> tasks;
    for (const auto& spec : certification_specs()) {
        tasks.push_back([spec] { return invert_cases(spec); });
        tasks.push_back([spec] { return norm_cases(spec); });
        tasks.push_back([spec] { return residual_cases(spec); });
    }
    for (double lambda : {1.0, 0.1, 0.03, 0.01}) tasks.push_back([lambda] { return uncertainty_cases(1.0, lambda); });
    for (const auto& name : limit_case_names()) tasks.push_back([name] { return limit_cases(name); });

    std::vector<std::vector<report::CaseReport>> results(tasks.size());
    std::vector<std::string> errors(tasks.size());
    kernels::apply_thread_limit();
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        try {
            results[i] = tasks[i]();
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }

    std::vector<report::CaseReport> out;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (!errors[i].empty()) {
            report::CaseReport r;
            r.case_id = "error/task-" + std::to_string(i);
            r.notes = errors[i];
            r.pass = false;
            out.push_back(r);
        }
        for (auto& r : results[i]) out.push_back(std::move(r));
    }
    return out;
}

}  // namespace nse::suite
