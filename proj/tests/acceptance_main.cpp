// Release acceptance gate: runs every check and prints one PASS/FAIL line
// per check with its honest population counts; exits nonzero when any fails.

#include <cstdio>

#include "hpd/verify.hpp"

int main() {
    int index = 0, failed = 0;
    auto results = hpd::run_acceptance([&](const hpd::CheckResult& r) {
        ++index;
        if (!r.pass) ++failed;
        std::printf("[%2d/10] %s  %-34s (%.1fs)  %s\n", index,
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
    });
    std::printf("%s: %zu/%zu checks passed\n", failed ? "FAIL" : "PASS",
                results.size() - static_cast<std::size_t>(failed),
                results.size());
    return failed ? 1 : 0;
}
