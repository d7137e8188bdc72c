#include "nlse/grid.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>

namespace nlse {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// A non-negative decimal literal held as mantissa / 10^decimals.
struct Decimal {
  std::int64_t mantissa = 0;
  int decimals = 0;
};

constexpr int kMaxDecimals = 9;

Decimal parse_decimal(std::string_view token) {
  token = trim(token);
  if (token.empty()) throw GridSpecError("empty number in grid spec");
  Decimal d;
  bool seen_point = false;
  bool any_digit = false;
  for (char c : token) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      any_digit = true;
      if (seen_point && ++d.decimals > kMaxDecimals) {
        throw GridSpecError("too many decimals in '" + std::string(token) + "'");
      }
      d.mantissa = d.mantissa * 10 + (c - '0');
      if (d.mantissa > (std::int64_t{1} << 52)) {
        throw GridSpecError("number too large in '" + std::string(token) + "'");
      }
    } else {
      throw GridSpecError("invalid number '" + std::string(token) + "'");
    }
  }
  if (!any_digit) throw GridSpecError("invalid number '" + std::string(token) + "'");
  return d;
}

std::int64_t scale_to(const Decimal& d, int decimals) {
  std::int64_t m = d.mantissa;
  for (int i = d.decimals; i < decimals; ++i) m *= 10;
  return m;
}

double power_of_ten(int decimals) {
  double p = 1.0;
  for (int i = 0; i < decimals; ++i) p *= 10.0;
  return p;
}

// Division of two exactly representable integers is correctly rounded, so
// the result is the double nearest to the decimal value.
double to_double(std::int64_t mantissa, int decimals) {
  return static_cast<double>(mantissa) / power_of_ten(decimals);
}

void append_range(std::string_view segment, std::vector<double>& out) {
  std::array<std::string_view, 3> parts;
  std::size_t n = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= segment.size(); ++i) {
    if (i == segment.size() || segment[i] == ':') {
      if (n == parts.size()) throw GridSpecError("range must be start:stop:step");
      parts[n++] = segment.substr(start, i - start);
      start = i + 1;
    }
  }
  if (n != 3) throw GridSpecError("range must be start:stop:step");
  const Decimal first = parse_decimal(parts[0]);
  const Decimal last = parse_decimal(parts[1]);
  const Decimal step = parse_decimal(parts[2]);
  const int decimals = std::max({first.decimals, last.decimals, step.decimals});
  const std::int64_t a = scale_to(first, decimals);
  const std::int64_t b = scale_to(last, decimals);
  const std::int64_t s = scale_to(step, decimals);
  if (s <= 0) throw GridSpecError("range step must be positive");
  if (b < a) throw GridSpecError("range stop is below its start");
  if ((b - a) / s > 1'000'000) throw GridSpecError("range has too many points");
  for (std::int64_t m = a; m <= b; m += s) out.push_back(to_double(m, decimals));
}

}  // namespace

std::vector<double> parse_grid(std::string_view spec) {
  spec = trim(spec);
  if (spec == "default") spec = kDefaultGridSpec;
  if (spec.empty()) throw GridSpecError("empty grid spec");

  std::vector<double> grid;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i != spec.size() && spec[i] != ',') continue;
    const std::string_view segment = trim(spec.substr(start, i - start));
    start = i + 1;
    if (segment.find(':') != std::string_view::npos) {
      append_range(segment, grid);
    } else {
      const Decimal d = parse_decimal(segment);
      grid.push_back(to_double(d.mantissa, d.decimals));
    }
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw GridSpecError("grid is not strictly increasing at " + format_q(grid[i]));
    }
  }
  return grid;
}

std::vector<double> default_grid() { return parse_grid(kDefaultGridSpec); }

std::string format_q(double q) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), q);
  return std::string(buf.data(), ptr);
}

}  // namespace nlse
