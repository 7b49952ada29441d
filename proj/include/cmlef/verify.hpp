#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmlef/lefschetz.hpp"

namespace cmlef {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::uint64_t checked = 0;
    std::string counterexample;  // empty when passed
};

struct VerifyReport {
    std::vector<unsigned> factors;
    unsigned g = 0;
    std::uint64_t seed = 0;
    std::vector<SuiteResult> suites;
    bool all_passed = false;
};

/// Runs the operator-calculus suites on one configuration:
///   hard-lefschetz          L^{g-i} invertible for 0 <= i <= g
///   lefschetz-power-law     exact support and +/-(g-i)! zeta^K coefficients
///   theta-support           theta_i columns live on the K-shifted types
///   lambda-label-invariance Lambda preserves the reduced label (I0, J0)
///   primitivity-criterion   primitive <=> I n cJ empty <=> Lambda kills
///   lambda-regime-boundary  at degree g+1, Lambda equals theta_{g-1}
///   pairing-random          seeded random elements: trivial pairing <=> zero
VerifyReport run_verify_suites(const LefschetzClass& lc, std::uint64_t seed);

nlohmann::json to_json(const VerifyReport& report);

}  // namespace cmlef
