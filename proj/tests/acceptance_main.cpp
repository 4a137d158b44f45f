// Runs the full acceptance battery: one pass/fail line per criterion on
// stdout, live progress and counterexamples on stderr, exit 0 iff all pass.
#include <cstdlib>
#include <iostream>

#include "octiso/acceptance.hpp"

int main(int argc, char** argv) {
    octiso::acceptance::config cfg;
    if (argc > 1) cfg.seed = std::strtoul(argv[1], nullptr, 10);
    auto results = octiso::acceptance::run_all(cfg, &std::cerr);
    bool all = true;
    for (const auto& r : results) {
        std::cout << "criterion " << r.number << " [" << r.name << "]: "
                  << (r.pass ? "PASS" : "FAIL") << " (" << r.detail;
        if (!r.time_ok) std::cout << "; over time budget";
        std::cout << ")\n";
        all &= r.pass;
    }
    return all ? 0 : 1;
}
