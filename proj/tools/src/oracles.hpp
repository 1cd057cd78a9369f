#pragma once

#include <string>

namespace nippas::cli {

/// Brute-force comparison suites (greville, theorem1, quadrature, pso);
/// prints max deviations against their tolerances, exit 0 iff all pass.
int oracle_command(const std::string& suite);

}  // namespace nippas::cli
