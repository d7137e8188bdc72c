#include <gtest/gtest.h>

#include "nlse/grid.hpp"

namespace nlse {
namespace {

TEST(ParseGrid, DefaultGridComposition) {
  const auto grid = default_grid();
  ASSERT_EQ(grid.size(), 43u);  // 21 + 10 + 12
  EXPECT_EQ(grid.front(), 0.0);
  EXPECT_EQ(grid[1], 0.1);
  EXPECT_EQ(grid[3], 0.3);
  EXPECT_EQ(grid[20], 2.0);
  EXPECT_EQ(grid[21], 2.2);
  EXPECT_EQ(grid[29], 3.8);
  EXPECT_EQ(grid[30], 4.0);
  EXPECT_EQ(grid[31], 4.5);
  EXPECT_EQ(grid.back(), 10.0);
  EXPECT_EQ(parse_grid("default"), grid);
}

TEST(ParseGrid, ValuesAndRangesMix) {
  EXPECT_EQ(parse_grid("0,1"), (std::vector<double>{0.0, 1.0}));
  EXPECT_EQ(parse_grid(" 0 , 0.5:1.5:0.5 , 7 "), (std::vector<double>{0.0, 0.5, 1.0, 1.5, 7.0}));
  EXPECT_EQ(parse_grid("0:1:0.3"), (std::vector<double>{0.0, 0.3, 0.6, 0.9}));
  EXPECT_EQ(parse_grid("3"), (std::vector<double>{3.0}));
}

TEST(ParseGrid, RangePointsAreExactDecimals) {
  const auto grid = parse_grid("0:1:0.1");
  ASSERT_EQ(grid.size(), 11u);
  const double expected[] = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_EQ(grid[i], expected[i]);
}

TEST(ParseGrid, Rejections) {
  EXPECT_THROW(parse_grid(""), GridSpecError);
  EXPECT_THROW(parse_grid("1,0.5"), GridSpecError);
  EXPECT_THROW(parse_grid("1,1"), GridSpecError);
  EXPECT_THROW(parse_grid("-1,2"), GridSpecError);
  EXPECT_THROW(parse_grid("0:1"), GridSpecError);
  EXPECT_THROW(parse_grid("0:1:0"), GridSpecError);
  EXPECT_THROW(parse_grid("2:1:0.1"), GridSpecError);
  EXPECT_THROW(parse_grid("abc"), GridSpecError);
  EXPECT_THROW(parse_grid("1e3"), GridSpecError);
  EXPECT_THROW(parse_grid("0,,1"), GridSpecError);
  EXPECT_THROW(parse_grid("0:1:0.5:2"), GridSpecError);
  EXPECT_THROW(parse_grid("0:1:0.5,0.7"), GridSpecError);
}

TEST(FormatQ, ShortestRoundTrip) {
  EXPECT_EQ(format_q(0.0), "0");
  EXPECT_EQ(format_q(0.1), "0.1");
  EXPECT_EQ(format_q(4.5), "4.5");
  EXPECT_EQ(format_q(10.0), "10");
  for (double q : parse_grid("default")) EXPECT_EQ(std::stod(format_q(q)), q);
}

}  // namespace
}  // namespace nlse
