#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bihom::cli {

enum ExitCode : int { kSuccess = 0, kNegative = 1, kUsage = 2 };

/// Entry point shared by the executable and the tests; args excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Golden catalog document: every family with its templates, default samples
/// and expected rows.
std::string catalog_golden_json();

}  // namespace bihom::cli
