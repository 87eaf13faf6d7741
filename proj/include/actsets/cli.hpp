#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "actsets/scenario.hpp"

namespace actsets::cli {

struct RunOptions {
    std::uint64_t seed = 0;
    int trials = 100;
    bool numeric_mode = false;  // route value queries through the numeric body
    double tolerance = 1e-9;
    bool json = false;
};

/// Executes one query against a scenario, writing the report to out.
/// Returns 0, or 1 for a false `compare` verdict.
int execute_query(const Scenario& scenario, const std::vector<std::string>& args,
                  const RunOptions& options, std::ostream& out);

/// Full command-line entry point. Returns 0 on success, 1 for a false
/// `compare` verdict, 2 on any error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace actsets::cli
