#include <gtest/gtest.h>

#include "polar/errors.hpp"
#include "polar/oracle.hpp"
#include "support/helpers.hpp"

using namespace polar;
using polar::testing::poly;

namespace {

RealPoint point_at(std::vector<Rational> xs) {
  RealPoint pt;
  for (const auto& x : xs) pt.coords.push_back(Interval::point(x));
  return pt;
}

const char* kTwoCircles = "((x-2)^2 + y^2 - 1)*((x+2)^2 + y^2 - 1)";
const char* kTorus = "(x^2 + y^2 + z^2 + 3)^2 - 16*(x^2 + y^2)";

}  // namespace

TEST(ParseBox, Forms) {
  Box b = parse_box("-2,2;-1/2,3");
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].first, Rational(-2));
  EXPECT_EQ(b[1].first, Rational(-1, 2));
  EXPECT_EQ(b[1].second, Rational(3));
  EXPECT_THROW(parse_box("1,0;0,1"), InvalidArgument);
  EXPECT_THROW(parse_box("1;0,1"), InvalidArgument);
  EXPECT_THROW(parse_box(""), InvalidArgument);
}

TEST(GridComponents, Circle) {
  auto gc = grid_components(poly("x^2 + y^2 - 1", 2), parse_box("-2,2;-2,2"), 64);
  EXPECT_EQ(gc.components.size(), 1u);
  EXPECT_EQ(gc.cell_size[0], Rational(1, 16));
}

TEST(GridComponents, TwoCircles) {
  auto gc = grid_components(poly(kTwoCircles, 2), parse_box("-4,4;-2,2"), 64);
  EXPECT_EQ(gc.components.size(), 2u);
}

TEST(GridComponents, Torus) {
  auto gc = grid_components(poly(kTorus, 3), parse_box("-4,4;-4,4;-4,4"), 48);
  EXPECT_EQ(gc.components.size(), 1u);
}

TEST(GridComponents, EmptyAndErrors) {
  auto gc = grid_components(poly("x^2 + y^2 + 1", 2), parse_box("-2,2;-2,2"), 16);
  EXPECT_TRUE(gc.components.empty());
  EXPECT_THROW(grid_components(poly("x^2 + y^2 - 1", 2), parse_box("-2,2;-2,2"), 4),
               InvalidArgument);
  EXPECT_THROW(grid_components(poly("x - 1", 1), parse_box("-2,2"), 16), InvalidArgument);
  EXPECT_THROW(grid_components(poly("x^2 + y^2 - 1", 2), parse_box("-2,2;-2,2;-2,2"), 16),
               InvalidArgument);
}

TEST(GridComponents, StableUnderRefinement) {
  for (unsigned res : {16u, 32u, 64u, 128u}) {
    auto gc = grid_components(poly(kTwoCircles, 2), parse_box("-4,4;-2,2"), res);
    EXPECT_EQ(gc.components.size(), 2u) << res;
  }
}

TEST(Coverage, TwoCircles) {
  auto gc = grid_components(poly(kTwoCircles, 2), parse_box("-4,4;-2,2"), 64);
  std::vector<RealPoint> pts{point_at({Rational(-3), Rational(0)}), point_at({Rational(1), Rational(0)})};
  auto rep = coverage_check(pts, gc);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.component_count, 2u);
  ASSERT_EQ(rep.assignment.size(), 2u);
  EXPECT_TRUE(rep.assignment[0].has_value());
  EXPECT_NE(rep.assignment[0], rep.assignment[1]);

  pts.pop_back();  // the circle around (2, 0) loses its point
  auto bad = coverage_check(pts, gc);
  EXPECT_FALSE(bad.pass);
  ASSERT_EQ(bad.uncovered.size(), 1u);
}

TEST(Coverage, PointsOffTheSetAndEmpty) {
  auto gc = grid_components(poly("x^2 + y^2 - 1", 2), parse_box("-2,2;-2,2"), 32);
  std::vector<RealPoint> far{point_at({Rational(0), Rational(0)})};
  auto rep = coverage_check(far, gc);
  EXPECT_FALSE(rep.pass);
  EXPECT_FALSE(rep.assignment[0].has_value());

  auto empty = grid_components(poly("x^2 + y^2 + 1", 2), parse_box("-2,2;-2,2"), 16);
  auto vac = coverage_check(std::vector<RealPoint>{}, empty);
  EXPECT_TRUE(vac.pass);
  EXPECT_EQ(vac.component_count, 0u);
  EXPECT_FALSE(vac.note.empty());
}
