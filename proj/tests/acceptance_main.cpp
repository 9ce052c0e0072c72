// Acceptance criteria 1-10. One line per criterion; exit status 1 if any fails.
#include <cstdio>
#include <cstring>

#include "eigenstrata/acceptance.hpp"

int main(int argc, char** argv) {
    bool full = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--full") == 0) full = true;
    auto results = eigenstrata::run_acceptance(full, [](const eigenstrata::CriterionResult& r) {
        std::printf("[%s] criterion %2d %-30s value=%.6g bound=%.6g | %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.value, r.bound, r.detail.c_str());
        std::fflush(stdout);
    });
    int failed = 0;
    for (const auto& r : results) failed += !r.pass;
    std::printf("%d/%zu criteria passed%s\n", static_cast<int>(results.size()) - failed, results.size(),
                full ? "" : " (fast suite, Monte Carlo criterion 8 not run)");
    return failed ? 1 : 0;
}
