#pragma once

#include "supercb/matrices.hpp"

#include <string>
#include <vector>

namespace supercb {

struct CheckResult {
    std::string name;
    bool pass = false;
    long cases = 0;
    std::string detail;
    double seconds = 0.0;
};

CheckResult check_golden_gl21(int a_max);
CheckResult check_golden_gl22(int a_max, int f_max);
CheckResult check_pbw(Shape sh, int entry_max);
CheckResult check_serre(Shape sh, long norm_bound);
CheckResult check_qs3(Shape sh, int r_max);
CheckResult check_canonical_axioms();
CheckResult check_stabilization();
CheckResult check_thm54(Shape sh, int r);
CheckResult check_pbw_product(Shape sh, int r_max);
CheckResult check_tableaux();
CheckResult check_laurent_properties(unsigned seed, int cases);
CheckResult check_matrices_properties(unsigned seed, int cases);

/* every acceptance criterion, in order */
std::vector<CheckResult> run_acceptance();

std::string format_result(const CheckResult& r);

} // namespace supercb
