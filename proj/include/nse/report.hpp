#pragma once

// Uniform verification record, serialized as
//   {case, family, params, measured, expected, rel_dev, grid_meta, pass, notes}.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nse/verify.hpp"

namespace nse::report {

struct CaseReport {
    std::string case_id;
    std::string family;
    std::map<std::string, double> params;
    double measured = 0.0;
    double expected = 0.0;
    double rel_dev = 0.0;
    double tolerance = 0.0;
    std::optional<verify::GridMeta> grid;
    bool pass = false;
    std::string notes;
};

CaseReport from_limit(const verify::LimitReport& limit, std::string family = {},
                      std::map<std::string, double> params = {});

/// Residual checked against an upper bound: measured = l2_rel, expected = 0,
/// rel_dev = l2_rel, pass = l2_rel < bound.
CaseReport from_residual(std::string case_id, const verify::ResidualReport& residual, double bound);

/// Residual that must exceed a lower bound (negative control).
CaseReport from_negative_control(std::string case_id, const verify::ResidualReport& residual, double floor);

nlohmann::ordered_json to_json(const CaseReport& report);
nlohmann::ordered_json to_json(const std::vector<CaseReport>& reports);

bool all_pass(const std::vector<CaseReport>& reports);

}  // namespace nse::report
