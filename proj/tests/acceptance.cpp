// Acceptance gate: runs the full verification suite at its default corpus
// sizes and prints one line per criterion. Exits nonzero if any criterion
// fails, which fails the registered ctest entry.

#include <cstdio>
#include <thread>

#include "dimforce/checks.hpp"

int main() {
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (workers > 8) workers = 8;

    dimforce::SuiteResult suite = dimforce::verify_paper_suite(0, workers);
    for (const dimforce::SuiteCheck& c : suite.checks)
        std::printf("%s  %-32s %s (%.0f ms)\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    c.detail.c_str(), c.ms);
    std::printf("%s\n", suite.all_pass ? "acceptance: all criteria passed"
                                       : "acceptance: CRITERIA FAILED");
    return suite.all_pass ? 0 : 1;
}
