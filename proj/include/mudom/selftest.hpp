#ifndef MUDOM_SELFTEST_HPP
#define MUDOM_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mudom {

struct SuiteResult {
    std::string name;
    int passed = 0;
    int failed = 0;
};

struct SelftestSummary {
    std::vector<SuiteResult> suites;
    bool ok = false;
};

// Deterministic invariant suites over every module; same seed, same summary.
SelftestSummary run_selftest(std::uint64_t seed);

}  // namespace mudom

#endif
