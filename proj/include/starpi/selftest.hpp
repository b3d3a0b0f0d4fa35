#pragma once

#include <ostream>

namespace starpi {

struct SelftestOptions {
    bool slow = false;     // include the n = 5 suites
    int max_degree = 6;
};

// Runs the acceptance suite, printing one pass/fail line per criterion.
// Returns true iff every criterion passes.
bool run_acceptance(std::ostream& out, const SelftestOptions& opts = {});

}  // namespace starpi
