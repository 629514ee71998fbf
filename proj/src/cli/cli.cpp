#include "nse/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "nse/construct.hpp"
#include "nse/csv.hpp"
#include "nse/errors.hpp"
#include "nse/evolve.hpp"
#include "nse/kernels.hpp"
#include "nse/models.hpp"
#include "nse/report.hpp"
#include "nse/suite.hpp"

namespace nse::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ModelFlags {
    std::string model;
    std::map<std::string, double> storage;
    std::vector<std::pair<std::string, CLI::Option*>> options;

    void attach(CLI::App* app, bool required) {
        auto* opt = app->add_option("--model", model, "Model family (see `nse list`)");
        if (required) opt->required();
        for (const char* key : {"hbar", "mass", "omega", "omega1", "omega2", "a", "lambda", "L", "beta", "b0", "aB", "N"})
            options.emplace_back(key, app->add_option(std::string("--") + key, storage[key], key));
    }

    std::map<std::string, double> given() const {
        std::map<std::string, double> out;
        for (const auto& [key, opt] : options)
            if (opt->count() > 0) out[key] = storage.at(key);
        return out;
    }

    models::ModelSpec spec() const {
        auto s = models::make_spec(model, given());
        models::validate(s);
        return s;
    }
};

/// Output to a file when a path is given, else to `fallback`.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw UsageError("cannot open '" + path + "' for writing");
            stream_ = &file_;
        }
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

std::string command_line(int argc, const char* const* argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) s += (i ? " " : "") + std::string(argv[i]);
    return s;
}

/// Run metadata goes next to the data file so the data itself stays reproducible.
void write_sidecar(const std::string& path, int argc, const char* const* argv) {
    if (path.empty()) return;
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::ostringstream stamp;
    stamp << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
    json meta;
    meta["command"] = command_line(argc, argv);
    meta["timestamp"] = stamp.str();
    meta["threads"] = kernels::configured_threads();
    std::ofstream(path + ".meta.json") << meta.dump(2) << '\n';
}

json spec_json(const models::ModelSpec& spec) {
    json j;
    j["family"] = models::family_name(spec);
    json p = json::object();
    for (const auto& [k, v] : models::parameters(spec)) p[k] = v;
    j["params"] = p;
    return j;
}

int emit_reports(const std::string& suite_name, const std::vector<report::CaseReport>& cases, const std::string& path,
                 std::ostream& out, std::ostream& err) {
    json j;
    j["suite"] = suite_name;
    j["pass"] = report::all_pass(cases);
    j["cases"] = report::to_json(cases);
    {
        Sink sink(path, out);
        *sink << j.dump(2) << '\n';
    }
    if (report::all_pass(cases)) return exit_pass;
    err << "failed cases:\n";
    for (const auto& c : cases)
        if (!c.pass)
            err << "  " << c.case_id << " (measured " << c.measured << ", expected " << c.expected << ", rel_dev "
                << c.rel_dev << ", tolerance " << c.tolerance << ")\n";
    return exit_failure;
}

std::pair<double, double> parse_span(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("--xspan expects lo:hi");
    try {
        const double lo = std::stod(text.substr(0, colon));
        const double hi = std::stod(text.substr(colon + 1));
        if (!(hi > lo)) throw UsageError("--xspan needs lo < hi");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError("--xspan expects two numbers, lo:hi");
    }
}

/// Radius where phi0 drops below `level`, by doubling the length scale.
double decay_radius(const models::GroundState& g, double level) {
    double r = g.length_scale;
    while (g.profile(r) >= level && r < 1e6 * g.length_scale) r *= 2.0;
    return r;
}

void write_diagnostics(std::ostream& out, const std::vector<evolve::Diagnostic>& diagnostics) {
    csv::write_header(out, {"t", "mass", "peak_x", "l2_err_vs_reference"});
    for (const auto& d : diagnostics) csv::write_row(out, {d.t, d.mass, d.peak_x, d.l2_err});
}

double fitted_slope(const std::vector<evolve::Diagnostic>& d) {
    if (d.size() < 2) return std::numeric_limits<double>::quiet_NaN();
    double st = 0.0, sx = 0.0, stt = 0.0, stx = 0.0;
    for (const auto& p : d) {
        st += p.t;
        sx += p.peak_x;
        stt += p.t * p.t;
        stx += p.t * p.peak_x;
    }
    const double n = static_cast<double>(d.size());
    return (n * stx - st * sx) / (n * stt - st * st);
}

// ---- list -------------------------------------------------------------------

int cmd_list(std::ostream& out) {
    struct Row {
        const char* name;
        const char* params;
        const char* dims;
        const char* description;
    };
    const Row rows[] = {
        {"gausson", "omega N", "N", "harmonic oscillator; logarithmic nonlinearity"},
        {"trapped-gausson", "omega1 omega2", "3", "oscillator split into external trap + logarithmic term"},
        {"cosh1d", "a", "1", "1/cosh soliton; cubic nonlinearity"},
        {"coshNd", "a N", "N", "1/cosh(r/a) ground state in N dimensions"},
        {"power-law", "a lambda", "1", "cosh^(-1/lambda) profile; |Psi|^(2 lambda) nonlinearity"},
        {"tan2", "L beta", "1", "tan^2 well between walls at |x| = pi L/2"},
        {"softened-delta", "a b0", "1", "regularized delta well; b0 -> 0 delta limit"},
        {"coulomb", "aB", "3", "hydrogen-like ground state; 1/ln nonlinearity"},
    };
    out << std::left << std::setw(17) << "family" << std::setw(15) << "parameters" << std::setw(5) << "N"
        << "description\n";
    for (const auto& r : rows)
        out << std::setw(17) << r.name << std::setw(15) << r.params << std::setw(5) << r.dims << r.description
            << '\n';
    out << "common: hbar mass (default 1)\n";
    return exit_pass;
}

// ---- curve ------------------------------------------------------------------

struct CurveFlags {
    ModelFlags model;
    std::string what;
    std::optional<double> from;
    std::optional<double> to;
    std::size_t points = 201;
    std::string out_path;
};

int cmd_curve(const CurveFlags& f, std::ostream& out) {
    const auto spec = f.model.spec();
    const auto problem = models::make_problem(spec);
    const auto& g = problem.ground;
    if (f.points < 2) throw UsageError("--points must be at least 2");

    std::vector<std::string> columns;
    double lo = 0.0;
    double hi = 0.0;
    if (f.what == "nonlinearity") {
        if (!problem.nonlinearity.shape_fn) throw UsageError("this model has no nonlinearity (b0 = 0)");
        lo = f.from.value_or(1e-3);
        hi = f.to.value_or(1.0);
        if (!(lo > 0.0 && hi <= 1.0)) throw UsageError("nonlinearity range must lie in (0, 1]");
        columns = {"phi", "G"};
    } else if (f.what == "potential" || f.what == "profile") {
        const double edge = g.support.bounded() ? g.support.half_width / g.length_scale : 4.0;
        lo = f.from.value_or(0.0);
        hi = f.to.value_or(edge);
        if (lo < 0.0) throw UsageError("radial range must start at r >= 0");
        columns = {"r_over_length", f.what == "potential" ? "U_over_absE0" : "phi0"};
    } else {
        throw UsageError("--what must be potential, profile or nonlinearity");
    }
    if (!(hi > lo)) throw UsageError("empty range: need --from < --to");

    Sink sink(f.out_path, out);
    csv::write_header(*sink, columns);
    for (std::size_t i = 0; i < f.points; ++i) {
        double s = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(f.points - 1);
        if (i + 1 == f.points) s = hi;
        double y = 0.0;
        if (f.what == "nonlinearity") {
            y = problem.nonlinearity.shape(s);
        } else {
            const double r = s * g.length_scale;
            if (f.what == "potential")
                y = problem.potential(r) / std::abs(g.energy);
            else
                y = (g.support.bounded() && r >= g.support.half_width) ? 0.0 : g.profile(r);
        }
        csv::write_row(*sink, {s, y});
    }
    return exit_pass;
}

// ---- verify -----------------------------------------------------------------

struct VerifyFlags {
    ModelFlags residual_model, invert_model, norm_model;
    std::optional<std::size_t> residual_points;
    std::optional<double> residual_from, residual_to;
    std::string invert_csv;
    double unc_a = 1.0;
    double unc_lambda = 0.01;
    double unc_hbar = 1.0;
    double unc_mass = 1.0;
    std::vector<std::string> limit_case;
    suite::LimitOptions limit_options;
    std::string out_path;
};

int cmd_verify(CLI::App& verify, const VerifyFlags& f, std::ostream& out, std::ostream& err) {
    const auto* sub = verify.get_subcommands().front();
    const std::string name = sub->get_name();
    std::vector<report::CaseReport> cases;
    if (name == "residual") {
        const auto spec = f.residual_model.spec();
        std::optional<suite::ResidualSetup> setup;
        if (f.residual_points || f.residual_from || f.residual_to) {
            auto s = suite::residual_setup(spec);
            if (f.residual_points) s.points = *f.residual_points;
            if (f.residual_from) s.window.lo = *f.residual_from;
            if (f.residual_to) s.window.hi = *f.residual_to;
            setup = s;
        }
        cases = suite::residual_cases(spec, setup);
    } else if (name == "invert") {
        const auto spec = f.invert_model.spec();
        cases = suite::invert_cases(spec);
        if (!f.invert_csv.empty()) {
            const auto synth = construct::synthesize(spec);
            Sink sink(f.invert_csv, out);
            csv::write_header(*sink, {"phi", "G_synth", "G_analytic", "rel_dev"});
            for (std::size_t i = 0; i < synth.phi.size(); ++i)
                csv::write_row(*sink, {synth.phi[i], synth.g_synth[i], synth.g_analytic[i], synth.rel_dev[i]});
        }
    } else if (name == "norm") {
        cases = suite::norm_cases(f.norm_model.spec());
    } else if (name == "uncertainty") {
        if (!(f.unc_lambda >= 1e-4 && f.unc_lambda <= 1e2)) throw UsageError("--lambda must lie in [1e-4, 1e2]");
        cases = suite::uncertainty_cases(f.unc_a, f.unc_lambda, {f.unc_hbar, f.unc_mass});
    } else if (name == "limits") {
        const auto& names = f.limit_case.empty() ? suite::limit_case_names() : f.limit_case;
        for (const auto& n : names) {
            auto part = suite::limit_cases(n, f.limit_options);
            cases.insert(cases.end(), part.begin(), part.end());
        }
    } else {
        cases = suite::all_cases();
    }
    return emit_reports(name, cases, f.out_path, out, err);
}

// ---- evolve / collide ---------------------------------------------------------

struct EvolveFlags {
    ModelFlags model;
    double velocity = 0.0;
    double time = 1.0;
    double dt = 1e-3;
    std::size_t grid = 4096;
    std::string xspan;
    std::string method = "auto";
    std::size_t record_every = 100;
    std::string snapshots_path, diagnostics_path, summary_path;
};

int cmd_evolve(const EvolveFlags& f, std::ostream& out, std::ostream& err) {
    const auto spec = f.model.spec();
    evolve::require_evolvable(spec);
    const auto problem = models::make_problem(spec);
    const auto& g = problem.ground;
    if (!(f.time > 0.0) || !(f.dt > 0.0)) throw UsageError("--time and --dt must be positive");
    const auto steps = static_cast<std::size_t>(std::llround(f.time / f.dt));
    if (steps == 0) throw UsageError("--time shorter than --dt");

    evolve::EvolutionConfig config;
    config.steps = steps;
    config.dt = f.time / static_cast<double>(steps);
    config.record_every = f.record_every;
    config.keep_snapshots = !f.snapshots_path.empty();

    const bool walled = g.support.bounded();
    std::string method = f.method;
    if (method == "auto") method = walled ? "crank-nicolson" : "split-step";
    if (method != "split-step" && method != "crank-nicolson") throw UsageError("--method: auto, split-step or crank-nicolson");
    config.method = method == "split-step" ? evolve::Method::SplitStep : evolve::Method::CrankNicolson;

    FieldGrid grid;
    if (walled) {
        if (!f.xspan.empty()) throw UsageError("--xspan is fixed by the walls for this family");
        if (f.velocity != 0.0) throw UsageError("boosts are not defined between walls; use --velocity 0");
        grid = BoxGrid(f.grid + 1, -g.support.half_width, g.support.half_width);
    } else {
        double lo = 0.0;
        double hi = 0.0;
        if (f.xspan.empty()) {
            const double reach = decay_radius(g, 1e-12) + 10.0 * g.length_scale;
            const double travel = f.velocity * f.time;
            lo = -reach + std::min(0.0, travel);
            hi = reach + std::max(0.0, travel);
        } else {
            std::tie(lo, hi) = parse_span(f.xspan);
        }
        if (config.method == evolve::Method::SplitStep)
            grid = numerics::SpectralGrid(f.grid, lo, hi);
        else
            grid = BoxGrid(f.grid + 1, lo, hi);
    }

    const auto initial = evolve::boost(problem, grid, f.velocity, 0.0);
    const auto reference = evolve::boosted_reference(problem, grid, f.velocity);
    evolve::EvolutionResult result;
    try {
        result = evolve::evolve(problem, initial, config, reference);
    } catch (const evolve::NumericalAbort& abort) {
        const std::string path = f.diagnostics_path.empty() ? "nse_abort_diagnostics.csv" : f.diagnostics_path;
        std::ofstream diag(path);
        write_diagnostics(diag, abort.diagnostics());
        err << abort.what() << "\nlast good time " << abort.last_good().time << "; diagnostics written to " << path
            << '\n';
        return exit_abort;
    }

    if (!f.diagnostics_path.empty()) {
        Sink sink(f.diagnostics_path, out);
        write_diagnostics(*sink, result.diagnostics);
    }
    if (!f.snapshots_path.empty()) {
        Sink sink(f.snapshots_path, out);
        csv::write_snapshots(*sink, result.snapshots);
    }

    const auto& d = result.diagnostics;
    double max_err = 0.0;
    for (const auto& p : d) max_err = std::max(max_err, p.l2_err);
    const auto ref_final = reference(result.final_state.time);
    double modulus_drift = 0.0;
    for (std::size_t j = 0; j < ref_final.samples.size(); ++j)
        modulus_drift = std::max(modulus_drift, std::abs(std::abs(result.final_state.samples[j]) -
                                                         std::abs(ref_final.samples[j])));

    json summary = spec_json(spec);
    summary["method"] = method;
    summary["velocity"] = f.velocity;
    summary["time"] = result.final_state.time;
    summary["dt"] = config.dt;
    summary["steps"] = config.steps;
    summary["grid"] = {{"points", grid_size(grid)},
                       {"spacing", grid_spacing(grid)},
                       {"periodic", is_periodic(grid)}};
    summary["final_l2_err"] = d.back().l2_err;
    summary["max_l2_err"] = max_err;
    summary["max_modulus_deviation_over_c0"] = modulus_drift / g.norm_const;
    summary["mass_initial"] = d.front().mass;
    summary["mass_final"] = d.back().mass;
    summary["mass_drift"] = std::abs(d.back().mass - d.front().mass) / d.front().mass;
    summary["peak_velocity_fit"] = fitted_slope(d);
    Sink sink(f.summary_path, out);
    *sink << summary.dump(2) << '\n';
    return exit_pass;
}

struct CollideFlags {
    ModelFlags model;
    double v1 = 0.5;
    double v2 = -0.5;
    double separation = 20.0;
    double dt = 1e-3;
    std::size_t grid = 4096;
    std::string xspan;
    std::string trajectory_path, summary_path;
};

int cmd_collide(const CollideFlags& f, std::ostream& out, std::ostream& err) {
    const auto spec = f.model.spec();
    if (models::family_name(spec) != "cosh1d") throw UsageError("collide supports --model cosh1d only");
    if (f.v1 == f.v2) throw UsageError("--v1 and --v2 must differ");
    const auto g = models::ground_state(spec);

    double lo = 0.0;
    double hi = 0.0;
    if (f.xspan.empty()) {
        const double total = 2.0 * f.separation / std::abs(f.v1 - f.v2);
        double extent = 0.0;
        for (const auto& [x0, v] : {std::pair{-0.5 * f.separation, f.v1}, std::pair{0.5 * f.separation, f.v2}})
            extent = std::max({extent, std::abs(x0), std::abs(x0 + v * total)});
        hi = extent + decay_radius(g, 1e-12);
        lo = -hi;
    } else {
        std::tie(lo, hi) = parse_span(f.xspan);
    }
    evolve::EvolutionConfig config;
    config.dt = f.dt;
    config.steps = 0;
    const auto rep = evolve::collide(spec, f.v1, f.v2, f.separation, numerics::SpectralGrid(f.grid, lo, hi), config);

    if (!f.trajectory_path.empty()) {
        Sink sink(f.trajectory_path, out);
        csv::write_header(*sink, {"t", "left_peak", "right_peak"});
        for (std::size_t i = 0; i < rep.times.size(); ++i)
            csv::write_row(*sink, {rep.times[i], rep.left_peak[i], rep.right_peak[i]});
    }
    const bool pass = !rep.inconclusive && rep.correlation > 0.999 && rep.mass_drift < 1e-10;
    json summary = spec_json(spec);
    summary["v1"] = f.v1;
    summary["v2"] = f.v2;
    summary["separation"] = f.separation;
    summary["dt"] = f.dt;
    summary["final_time"] = rep.final_time;
    summary["pre_correlation"] = {rep.pre_correlation[0], rep.pre_correlation[1]};
    summary["post_correlation"] = {rep.post_correlation[0], rep.post_correlation[1]};
    summary["correlation"] = rep.correlation;
    summary["mass_drift"] = rep.mass_drift;
    summary["inconclusive"] = rep.inconclusive;
    summary["pass"] = pass;
    {
        Sink sink(f.summary_path, out);
        *sink << summary.dump(2) << '\n';
    }
    if (!pass) err << "collision check failed: correlation " << rep.correlation << ", mass drift " << rep.mass_drift
                   << (rep.inconclusive ? ", lobes not separated" : "") << '\n';
    return pass ? exit_pass : exit_failure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exactly solvable nonlinear Schroedinger equations: catalog, verification, evolution", "nse"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "List the model families");

    CurveFlags curve;
    auto* curve_cmd = app.add_subcommand("curve", "Emit potential, profile or nonlinearity as CSV");
    curve.model.attach(curve_cmd, true);
    curve_cmd->add_option("--what", curve.what, "potential | profile | nonlinearity")->required();
    curve_cmd->add_option("--from", curve.from, "start (r / length scale, or phi)");
    curve_cmd->add_option("--to", curve.to, "end (r / length scale, or phi)");
    curve_cmd->add_option("--points", curve.points, "number of samples");
    curve_cmd->add_option("--out", curve.out_path, "CSV path (default stdout)");

    VerifyFlags ver;
    auto* verify = app.add_subcommand("verify", "Run verification suites; JSON report");
    verify->require_subcommand(1);
    verify->add_option("--out", ver.out_path, "JSON path (default stdout)");
    auto* v_res = verify->add_subcommand("residual", "Stationary NSE residual");
    ver.residual_model.attach(v_res, true);
    v_res->add_option("--points", ver.residual_points, "grid points");
    v_res->add_option("--from", ver.residual_from, "window start");
    v_res->add_option("--to", ver.residual_to, "window end");
    auto* v_inv = verify->add_subcommand("invert", "Synthesized vs. analytic nonlinearity");
    ver.invert_model.attach(v_inv, true);
    v_inv->add_option("--csv", ver.invert_csv, "write phi, G_synth, G_analytic, rel_dev");
    auto* v_norm = verify->add_subcommand("norm", "Analytic vs. quadrature normalization");
    ver.norm_model.attach(v_norm, true);
    auto* v_unc = verify->add_subcommand("uncertainty", "Position/momentum spreads of the power-law family");
    v_unc->add_option("--a", ver.unc_a, "length a");
    v_unc->add_option("--lambda", ver.unc_lambda, "exponent lambda in [1e-4, 1e2]");
    v_unc->add_option("--hbar", ver.unc_hbar, "hbar");
    v_unc->add_option("--mass", ver.unc_mass, "mass");
    auto* v_lim = verify->add_subcommand("limits", "Limit identities");
    v_lim->add_option("--case", ver.limit_case, "softened-delta | delta | tan2 | trapped-gausson | power-law")
        ->check(CLI::IsMember(suite::limit_case_names()));
    v_lim->add_option("--a", ver.limit_options.a, "length a");
    v_lim->add_option("--b0", ver.limit_options.b0, "softening b0");
    v_lim->add_option("--L", ver.limit_options.L, "tan^2 length L");
    v_lim->add_option("--omega", ver.limit_options.omega, "total trap frequency");
    verify->add_subcommand("all", "Every standard case");
    for (auto* sub : verify->get_subcommands([](CLI::App*) { return true; })) sub->add_option("--out", ver.out_path, "JSON path (default stdout)");

    EvolveFlags evo;
    auto* evolve_cmd = app.add_subcommand("evolve", "Propagate a (boosted) ground state");
    evo.model.attach(evolve_cmd, true);
    evolve_cmd->add_option("--velocity", evo.velocity, "boost velocity");
    evolve_cmd->add_option("--time", evo.time, "total time");
    evolve_cmd->add_option("--dt", evo.dt, "time step");
    evolve_cmd->add_option("--grid", evo.grid, "grid points (power of two for split-step)");
    evolve_cmd->add_option("--xspan", evo.xspan, "lo:hi");
    evolve_cmd->add_option("--method", evo.method, "auto | split-step | crank-nicolson");
    evolve_cmd->add_option("--record-every", evo.record_every, "diagnostic interval in steps");
    evolve_cmd->add_option("--snapshots", evo.snapshots_path, "snapshot CSV (t, x, re, im, abs2)");
    evolve_cmd->add_option("--diagnostics", evo.diagnostics_path, "diagnostics CSV");
    evolve_cmd->add_option("--summary", evo.summary_path, "summary JSON (default stdout)");

    CollideFlags col;
    auto* collide_cmd = app.add_subcommand("collide", "Head-on collision of two boosted solitons");
    col.model.attach(collide_cmd, true);
    collide_cmd->add_option("--v1", col.v1, "velocity of the left soliton");
    collide_cmd->add_option("--v2", col.v2, "velocity of the right soliton");
    collide_cmd->add_option("--sep", col.separation, "initial separation");
    collide_cmd->add_option("--dt", col.dt, "time step");
    collide_cmd->add_option("--grid", col.grid, "grid points (power of two)");
    collide_cmd->add_option("--xspan", col.xspan, "lo:hi");
    collide_cmd->add_option("--trajectory", col.trajectory_path, "peak trajectory CSV");
    collide_cmd->add_option("--summary", col.summary_path, "summary JSON (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    kernels::apply_thread_limit();
    try {
        int code = exit_pass;
        if (list->parsed()) {
            code = cmd_list(out);
        } else if (curve_cmd->parsed()) {
            code = cmd_curve(curve, out);
            write_sidecar(curve.out_path, argc, argv);
        } else if (verify->parsed()) {
            code = cmd_verify(*verify, ver, out, err);
            write_sidecar(ver.out_path, argc, argv);
        } else if (evolve_cmd->parsed()) {
            code = cmd_evolve(evo, out, err);
            write_sidecar(evo.summary_path, argc, argv);
        } else if (collide_cmd->parsed()) {
            code = cmd_collide(col, out, err);
            write_sidecar(col.summary_path, argc, argv);
        }
        return code;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ConfigurationError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ConvergenceError& e) {
        err << "numerical abort: " << e.what() << '\n';
        return exit_abort;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
}

}  // namespace nse::cli
