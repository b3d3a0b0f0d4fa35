#include <cstring>
#include <iostream>

#include "starpi/selftest.hpp"

int main(int argc, char** argv) {
    starpi::SelftestOptions opts;
    for (int i = 1; i < argc; ++i)
        if (!std::strcmp(argv[i], "--slow")) opts.slow = true;
    return starpi::run_acceptance(std::cout, opts) ? 0 : 1;
}
