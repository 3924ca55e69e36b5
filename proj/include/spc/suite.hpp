#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spc {

struct SuiteOptions {
    bool full = true;           // include the (7,3,1) and (8,3,1) gadget runs
    int workers = 0;            // gadget verification thread count (0 = default)
    long long budget = 50'000'000;
    unsigned long long seed = 0; // offsets the random-instance streams
    bool inject_defect = false;  // self-test: corrupt one gadget and expect a failure
};

struct SuiteItem {
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::string detail;
};

struct SuiteResult {
    std::vector<SuiteItem> items;
    bool all_passed() const;
};

// Runs every check of the release gate, printing one pass/fail line per item
// to `log` as it goes.
SuiteResult run_acceptance_suite(const SuiteOptions& options, std::ostream& log);

} // namespace spc
