#pragma once

#include <string>
#include <vector>

namespace okb::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The built-in verification suite: every check is exact (zero tolerance) and
// timed where a budget applies. Returns one result per check, in order.
std::vector<CheckResult> run_all();

} // namespace okb::verify
