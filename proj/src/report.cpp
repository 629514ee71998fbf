#include "nse/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nse::report {

namespace {

// JSON has no representation for inf/nan; they are written as strings.
nlohmann::ordered_json number(double x) {
    if (std::isfinite(x)) return x;
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
}

}  // namespace

CaseReport from_limit(const verify::LimitReport& limit, std::string family, std::map<std::string, double> params) {
    CaseReport r;
    r.case_id = limit.case_id;
    r.family = std::move(family);
    r.params = std::move(params);
    r.measured = limit.measured;
    r.expected = limit.expected;
    r.rel_dev = limit.rel_dev;
    r.tolerance = limit.tolerance;
    r.pass = limit.passed;
    r.notes = limit.notes;
    return r;
}

CaseReport from_residual(std::string case_id, const verify::ResidualReport& residual, double bound) {
    CaseReport r;
    r.case_id = std::move(case_id);
    r.family = residual.family;
    r.params = residual.params;
    r.measured = residual.l2_rel;
    r.expected = 0.0;
    r.rel_dev = residual.l2_rel;
    r.tolerance = bound;
    r.grid = residual.grid;
    r.pass = std::isfinite(residual.l2_rel) && residual.l2_rel < bound;
    std::ostringstream notes;
    notes.precision(3);
    notes << "l2_rel < tolerance; max_rel = " << std::scientific << residual.max_rel;
    r.notes = notes.str();
    return r;
}

CaseReport from_negative_control(std::string case_id, const verify::ResidualReport& residual, double floor) {
    auto r = from_residual(std::move(case_id), residual, floor);
    r.pass = residual.l2_rel > floor;
    r.notes = "negative control: l2_rel > tolerance";
    return r;
}

nlohmann::ordered_json to_json(const CaseReport& report) {
    nlohmann::ordered_json j;
    j["case"] = report.case_id;
    j["family"] = report.family;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : report.params) params[k] = number(v);
    j["params"] = params;
    j["measured"] = number(report.measured);
    j["expected"] = number(report.expected);
    j["rel_dev"] = number(report.rel_dev);
    j["tolerance"] = number(report.tolerance);
    if (report.grid) {
        j["grid_meta"] = {{"points", report.grid->points},
                          {"spacing", report.grid->spacing},
                          {"window", {report.grid->window.lo, report.grid->window.hi}}};
    } else {
        j["grid_meta"] = nullptr;
    }
    j["pass"] = report.pass;
    j["notes"] = report.notes;
    return j;
}

nlohmann::ordered_json to_json(const std::vector<CaseReport>& reports) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr;
}

bool all_pass(const std::vector<CaseReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const CaseReport& r) { return r.pass; });
}

}  // namespace nse::report
