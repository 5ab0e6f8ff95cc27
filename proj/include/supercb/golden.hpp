#pragma once

#include "supercb/laurent.hpp"
#include "supercb/matrices.hpp"

#include <map>
#include <string>
#include <vector>

namespace supercb {

struct GoldenCase {
    std::string name;
    Mat target;
    std::map<Mat, Laurent> expansion;
    /* expected layered-subtraction multiples, zero entries omitted; only
     * pinned for selected cases */
    std::map<Mat, Laurent> witness;
    bool witness_known = false;
};

/* the four canonical-basis families of gl(2|1) at divided power a */
std::vector<GoldenCase> golden_gl21(int a);

/* the full gl(2|2) case table at (a, f) */
std::vector<GoldenCase> golden_gl22(int a, int f);

/* strictly upper (2|1): a E12 + b E13 + c E23 */
Mat mat21(int a, int b, int c);
/* strictly upper (2|2): [al be de / ga ep / ph] */
Mat mat22(int al, int be, int de, int ga, int ep, int ph);

} // namespace supercb
