#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "csk/laws.hpp"

namespace csk {

/// Uniform grid parsed from "start:stop:count".
struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
};

GridSpec parse_grid(const std::string& text);
std::vector<double> grid_points(const GridSpec& grid);

/// Law description from a JSON file path.
LawSpec load_law_file(const std::string& path);

/// CSV "x,density,atom_weight" over the grid, atoms appended as extra rows.
/// Returns a process exit code (0 ok, 3 numerical failure).
int run_density(const LawSpec& spec, const GridSpec& grid, std::ostream& out);

/// CSV "input,value" of a closed-form transform over the grid; points
/// outside the transform's domain are skipped.  which is one of
/// "G", "R", "PV", "M", "mean-of-theta".
int run_transform(const LawSpec& spec, const std::string& which,
                  const GridSpec& grid, std::ostream& out);

/// JSON report envelope for a verification suite.  Returns 0 when every
/// check passes, 1 otherwise (3 on numerical failure).
int run_verify(const std::string& suite, std::uint64_t seed,
               std::ostream& out);

}  // namespace csk
