#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lr {

struct PropertyOptions {
    unsigned long seed = 0xC0FFEEUL;
    int cases = 200;              // randomized cases per suite
    std::ostream* log = nullptr;  // one line per suite when set
};

struct PropertyResult {
    std::vector<std::string> suites_run;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Runs every randomized invariant suite; deterministic for a fixed seed.
PropertyResult run_property_suites(const PropertyOptions& options = {});

}  // namespace lr
