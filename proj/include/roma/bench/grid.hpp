#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace roma::bench {

/// "a,b,c" or "start:stop:step" (inclusive of stop up to rounding). Throws
/// std::invalid_argument on malformed or empty grids.
std::vector<double> parse_real_grid(std::string_view text);

/// Same syntax, values must be non-negative integers.
std::vector<std::size_t> parse_count_grid(std::string_view text);

}  // namespace roma::bench
