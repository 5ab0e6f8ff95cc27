#include "supercb/verify.hpp"

#include <iostream>

int main() {
    bool ok = true;
    for (const supercb::CheckResult& r : supercb::run_acceptance()) {
        std::cout << supercb::format_result(r) << std::endl;
        ok = ok && r.pass;
    }
    std::cout << (ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
    return ok ? 0 : 1;
}
