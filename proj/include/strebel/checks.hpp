#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace strebel {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

// series, bessel, intersections, ucurve, amplitudes, spectral, asymptotics
const std::vector<std::string>& check_suites();

// suite = "all" or one of check_suites(); the seed drives the random-series samples.
std::vector<CheckResult> run_checks(const std::string& suite, std::uint64_t seed = 20240611);

}  // namespace strebel
