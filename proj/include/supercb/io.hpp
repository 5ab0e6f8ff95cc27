#pragma once

#include "supercb/laurent.hpp"
#include "supercb/matrices.hpp"
#include "supercb/schur.hpp"
#include "supercb/uplus.hpp"

#include <json.hpp>

#include <string>

namespace supercb {

using Json = nlohmann::json;

/* polynomial <-> {"exp": coeff}; coefficients that do not fit in 64 bits are
 * encoded as decimal strings */
Json laurent_to_json(const Laurent& f);
Laurent laurent_from_json(const Json& j);

Json mat_to_json(const Mat& A); // {"m":..,"n":..,"rows":[[..],..]}
Mat mat_from_json(const Json& j);

Json element_to_json(const Element& x); // array of {"matrix","coefficient"}
Element element_from_json(const Json& j, Shape sh, Side side);

Json schur_to_json(const SchurElement& x); // {"r":..,"terms":[..]}
SchurElement schur_from_json(const Json& j, Shape sh);

Json record_to_json(const CanonicalRecord& rec);
CanonicalRecord record_from_json(const Json& j);

std::string laurent_to_latex(const Laurent& f);
std::string mat_to_latex(const Mat& A);
std::string record_to_latex(const CanonicalRecord& rec);

/* compact text form: sums of kE[i,j] and diag(c1,...,cN); "0" is the zero
 * matrix */
Mat parse_matrix(const std::string& text, Shape sh);
Comp parse_comp(const std::string& text, int expected_len = -1);

} // namespace supercb
