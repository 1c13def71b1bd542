// Runs the acceptance suite and prints one line per criterion.
#include <cstdio>

#include "schwarzian_lab/acceptance.hpp"

int main() {
    using namespace schwarzian_lab;
    AcceptanceContext ctx;
    ctx.seed = seed_from_environment();
    std::printf("seed %llu\n", static_cast<unsigned long long>(ctx.seed));

    bool all = true;
    for (const CriterionResult& c : run_acceptance(ctx)) {
        all = all && c.passed;
        std::printf("%s %-32s measured=%.6g threshold=%.6g time=%.3fs", c.passed ? "PASS" : "FAIL", c.id.c_str(),
                    c.measured, c.threshold, c.seconds);
        if (c.time_limit > 0.0) std::printf(" limit=%.0fs", c.time_limit);
        std::printf("  %s\n", c.description.c_str());
        if (!c.passed && !c.detail.empty()) std::printf("     %s\n", c.detail.c_str());
    }
    std::printf("%s\n", all ? "all criteria passed" : "some criteria failed");
    return all ? 0 : 1;
}
