#include "freeprob/acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

int main(int argc, char** argv) {
    std::string suite = "all";
    std::uint64_t seed = 1;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--suite") && i + 1 < argc) {
            suite = argv[++i];
        } else if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) {
            seed = std::strtoull(argv[++i], nullptr, 10);
        } else {
            std::fprintf(stderr, "usage: %s [--suite exact|montecarlo|all] [--seed n]\n", argv[0]);
            return 2;
        }
    }
    int unexpected = 0;
    for (const auto& r : freeprob::acceptance::run(suite, seed)) {
        const char* verdict = r.pass ? "PASS" : (r.known_fail ? "FAIL (expected)" : "FAIL");
        std::printf("%-15s %2d %-28s %6.2fs%s%s\n", verdict, r.id, r.name.c_str(), r.seconds,
                    r.detail.empty() ? "" : "  -- ", r.detail.c_str());
        if (!r.pass && !r.known_fail) ++unexpected;
    }
    std::printf("unexpected failures: %d\n", unexpected);
    return unexpected;
}
