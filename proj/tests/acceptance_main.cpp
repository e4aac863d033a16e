// Acceptance runner: one pass/fail line per criterion, nonzero exit on any
// failure. `--only N` restricts to one criterion; `--suite desk|extended`
// picks the parameter set; `--inject-psi-sign-bug` is the mutation fixture
// (the run is then expected to fail at the exponential-property criterion).

#include "frobkit/acceptance.hpp"

#include <cstdio>
#include <cstring>
#include <string>

int main(int argc, char** argv) {
    using namespace frobkit::acceptance;
    int only = 0;
    bool mutant = false;
    SuiteParams params = desk_params();
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--only") && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (!std::strcmp(argv[i], "--suite") && i + 1 < argc) {
            const std::string suite = argv[++i];
            if (suite == "desk") params = desk_params();
            else if (suite == "extended") params = extended_params();
            else {
                std::fprintf(stderr, "unknown suite '%s'\n", suite.c_str());
                return 2;
            }
        } else if (!std::strcmp(argv[i], "--inject-psi-sign-bug")) {
            mutant = true;
        } else {
            std::fprintf(stderr, "usage: %s [--only N] [--suite desk|extended] [--inject-psi-sign-bug]\n",
                         argv[0]);
            return 2;
        }
    }

    bool all_pass = true;
    for (int id = 1; id <= 11; ++id) {
        if (only && id != only) continue;
        const CriterionResult r = run_criterion(id, params, mutant);
        std::printf("[%2d/11] %s %-34s (%6.0f ms) %s\n", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.ms, r.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}
