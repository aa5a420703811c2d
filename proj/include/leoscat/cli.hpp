// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: subcommand parsing, pipeline orchestration, and
// deterministic plot-ready CSV emission.
#pragma once

#include <string>
#include <vector>

#include "leoscat/pipeline.hpp"

namespace leoscat::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Plain CSV with leading `#` metadata comments.
struct CsvTable {
    std::vector<std::string> meta;
    std::string header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row_errors; // one diagnostic per failed row
};

std::string to_string(const CsvTable& table);

/// Deterministic float formatting used in all CSV output: 9 significant digits.
std::string format_double(double value);

/// Geometry solve per elevation over [start, end] in step_deg increments:
/// one row per elevation with the solved axes and the achieved delay
/// statistics. Solver failures are reported per row and leave a row error.
CsvTable sweep(double start_deg, double end_deg, double step_deg, const SceneSpec& scene);

/// Entry point used by the binary and by tests. Returns the process exit
/// code: 0 on success, 2 on validation errors, 3 on numerical failures.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);

} // namespace leoscat::cli
