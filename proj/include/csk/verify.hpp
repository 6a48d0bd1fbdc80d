#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csk/report.hpp"

namespace csk {

/// Named verification suites: "reciprocity", "domains", "roundtrip",
/// "gineq", "bis", "reproductive", or "all".  Randomized checks draw from a
/// generator seeded with `seed`.
std::vector<Report> run_suite(const std::string& name, std::uint64_t seed);

std::vector<std::string> suite_names();

}  // namespace csk
