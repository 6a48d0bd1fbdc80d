#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace csk {

struct ReportDetail {
    std::string input;
    double expected = 0.0;
    double got = 0.0;
};

/// Outcome of one verification check.
struct Report {
    std::string check_name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::vector<ReportDetail> details;
};

nlohmann::json to_json(const Report& rep);

/// Envelope written by the verify command: schema tag, seed, and reports.
nlohmann::json report_envelope(const std::vector<Report>& reps,
                               std::uint64_t seed);

}  // namespace csk
