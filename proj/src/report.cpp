#include "csk/report.hpp"

namespace csk {

nlohmann::json to_json(const Report& rep) {
    nlohmann::json j;
    j["check_name"] = rep.check_name;
    j["max_residual"] = rep.max_residual;
    j["tolerance"] = rep.tolerance;
    j["pass"] = rep.pass;
    nlohmann::json details = nlohmann::json::array();
    for (const ReportDetail& d : rep.details) {
        details.push_back({{"input", d.input},
                           {"expected", d.expected},
                           {"got", d.got}});
    }
    j["details"] = details;
    return j;
}

nlohmann::json report_envelope(const std::vector<Report>& reps,
                               std::uint64_t seed) {
    nlohmann::json j;
    j["schema"] = "csk-report/1";
    j["seed"] = seed;
    nlohmann::json arr = nlohmann::json::array();
    for (const Report& r : reps) arr.push_back(to_json(r));
    j["reports"] = arr;
    return j;
}

}  // namespace csk
