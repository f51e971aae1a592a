#ifndef CHROMATICA_SELFTEST_HPP
#define CHROMATICA_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace chromatica {

struct SelftestConfig {
    std::uint64_t seed = 20240915;
    bool verbose = false;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs acceptance criterion `id` (1..12), or all of them when id == 0.
std::vector<CriterionResult> run_acceptance(int id = 0, const SelftestConfig& config = {});

// Pretty one-line-per-criterion rendering; returns the number of failures.
int print_acceptance_results(const std::vector<CriterionResult>& results);

} // namespace chromatica

#endif
