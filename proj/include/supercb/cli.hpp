#pragma once

#include "supercb/uplus.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace supercb {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string cache_file_name(Shape sh, Side side, const Mat& A);
void cache_store(const std::string& dir, const CanonicalRecord& rec);
/* nullopt when absent; throws std::runtime_error naming the path on corrupt
 * content */
std::optional<CanonicalRecord> cache_load(const std::string& dir, Shape sh, Side side,
                                          const Mat& A);

} // namespace supercb
