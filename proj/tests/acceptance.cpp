// Acceptance gate: one pass/fail line per criterion A1-A10.
// Optional arguments select a subset of suites, e.g. `acceptance A3 A6`.

#include <qschur/verify.hpp>

#include <cstdio>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> names(argv + 1, argv + argc);
    bool all_pass = true;
    try {
        qschur::verify::run(names, [&](const qschur::verify::SuiteResult& r) {
            std::printf("%-4s %s  (%s)\n", r.name.c_str(), r.pass ? "PASS" : "FAIL",
                        r.detail.c_str());
            std::fflush(stdout);
            all_pass = all_pass && r.pass;
        });
    } catch (const std::exception& e) {
        std::printf("FAIL  unexpected exception: %s\n", e.what());
        return 1;
    }
    return all_pass ? 0 : 1;
}
