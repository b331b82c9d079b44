#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "focksim/dynamics.hpp"

namespace focksim {

/// Parse a scenario from flat key=value text. `#` starts a comment; keys
/// outside the schema, duplicates, malformed values, and missing required
/// keys all raise ParseError naming the key and line. Defaults:
/// initial_level = levels, copies = 1, sample_every = 1, and for decay
/// models dim = levels + 1. Scenario invariant violations surface as
/// ConfigError.
Scenario parse_scenario(const std::string& text);

/// parse_scenario over a file's contents; unreadable path raises IoError.
Scenario parse_scenario_file(const std::filesystem::path& path);

/// Inverse of parse_scenario on the schema: every key emitted, numeric
/// values at full round-trip precision.
std::string render_scenario(const Scenario& scenario);

/// Trajectory CSV, 15 significant digits, LF line endings:
///   t,n_expect,entropy,purity,jensen_bound,vn_entropy,trace_error
/// sample_every thins rows (every k-th step); the trajectory itself is
/// never thinned.
std::string format_trajectory_csv(const Trajectory& trajectory,
                                  long sample_every);

void write_trajectory_csv(const Trajectory& trajectory,
                          const std::filesystem::path& path,
                          long sample_every);

/// Read back an emitted CSV; raises IoError on unreadable files, ParseError
/// on schema violations.
std::vector<TrajectorySample> read_trajectory_csv(
    const std::filesystem::path& path);

extern const char* const kCsvHeader;

}  // namespace focksim
