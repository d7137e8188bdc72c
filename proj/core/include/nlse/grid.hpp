#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nlse {

/// Sweep used when no grid is given: 0 to 2 by 0.1, 2.2 to 4 by 0.2,
/// 4.5 to 10 by 0.5 (43 points).
inline constexpr std::string_view kDefaultGridSpec = "0:2:0.1,2.2:4:0.2,4.5:10:0.5";

class GridSpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses a comma-separated list of values and "start:stop:step" ranges
/// (stop included when it lies on the step lattice). "default" selects
/// kDefaultGridSpec. Range points are generated on a decimal lattice so that
/// e.g. "0:1:0.1" yields exactly the doubles 0.1, 0.2, ... rather than
/// accumulated sums. The result must be strictly increasing and >= 0.
std::vector<double> parse_grid(std::string_view spec);

std::vector<double> default_grid();

/// Shortest decimal text that round-trips to `q`.
std::string format_q(double q);

}  // namespace nlse
