#include <cstdio>
#include <cstdlib>

#include "scissors/harness.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240601;
    int failed = 0;
    for (int i = 1; i <= scissors::kCriteria; ++i) {
        scissors::CriterionResult r = scissors::run_criterion(i, seed);
        std::printf("%s criterion %2d: %s [%.2f s] %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                    r.seconds, r.detail.c_str());
        std::fflush(stdout);
        if (!r.passed) ++failed;
    }
    std::printf("%d/%d criteria passed\n", scissors::kCriteria - failed, scissors::kCriteria);
    return failed == 0 ? 0 : 1;
}
