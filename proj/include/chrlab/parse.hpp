// parse.hpp -- text forms used on the command line and in the
// representation syntax.

#pragma once

#include "chrlab/biinfinite.hpp"
#include "chrlab/christoffel.hpp"
#include "chrlab/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chrlab {

/// "q/p" or "n" as an exact slope value, or "cf:t0,t1,t2,..." for an
/// irrational slope prefix (a trailing ",..." is tolerated and ignored).
LineSlope parse_slope(std::string_view text);

/// "n", "-n", "n/d".
Rational parse_rational(std::string_view text);

/// Half-open integer range "lo..hi".
std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text);

/// Comma-separated integers.
std::vector<std::int64_t> parse_int_list(std::string_view text);

std::string to_text(const LineSpec& line);

}  // namespace chrlab
