// Acceptance gate: one exact check per criterion, one line per result.
#include <cstdio>

#include "verify.hpp"

int main() {
    const auto results = okb::verify::run_all();
    bool all = true;
    for (const auto& r : results) {
        std::printf("%s  %s  —  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "acceptance: all criteria green"
                            : "acceptance: FAILURES above");
    return all ? 0 : 1;
}
