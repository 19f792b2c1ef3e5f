#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tilebalance/periodic_map.hpp"

namespace tilebalance {

/// Runs the command line; `args` excludes the program name.
/// Returns 0 on success, 1 when a check fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses a length such as "1.5" or "10U" (a multiple of `unit`).
double parse_length(std::string_view text, double unit);

/// Parses "R1:R2:STEP" into the inclusive arithmetic progression R1, R1+STEP, ...
std::vector<double> parse_radii(std::string_view text, double unit);

}  // namespace tilebalance
