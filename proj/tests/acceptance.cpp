#include "qsphere/certificates.hpp"

#include <chrono>
#include <cstdio>

int main() {
    int failed = 0;
    for (const auto& check : qsphere::acceptance_checks()) {
        const auto start = std::chrono::steady_clock::now();
        const qsphere::Certificate c = check.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%-6s %s  %s (%s) [%.1fs]\n", c.id.c_str(), c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    c.detail.c_str(), secs);
        std::fflush(stdout);
        if (!c.pass) ++failed;
    }
    std::printf("%d of 10 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
