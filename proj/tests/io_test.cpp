#include <gtest/gtest.h>

#include <sstream>

#include "lso/io.hpp"
#include "lso/random_points.hpp"

namespace lso {
namespace {

TEST(PointFile, ParsesAndAssignsLineIds) {
  std::istringstream in("0.5 0.25\n0.3 0.7\n");
  const auto pts = io::read_points(in, 4);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0].id, 0u);
  EXPECT_EQ(pts[1].id, 1u);
  EXPECT_EQ(pts[0].coords[0].raw, 8u);
  EXPECT_EQ(pts[1].coords[0].raw, 4u);
  EXPECT_EQ(pts[1].coords[1].raw, 11u);
}

TEST(PointFile, Errors) {
  {
    std::istringstream in("0.5 0.25\n0.3\n");
    EXPECT_THROW(io::read_points(in, 16), ParseError);
  }
  {
    std::istringstream in("0.5 1.0\n");
    EXPECT_THROW(io::read_points(in, 16), ParseError);
  }
  {
    std::istringstream in("0.5 abc\n");
    EXPECT_THROW(io::read_points(in, 16), ParseError);
  }
  {
    std::istringstream in("0.5\n\n0.25\n");
    EXPECT_THROW(io::read_points(in, 16), ParseError);
  }
  {
    std::istringstream in("0.5 0.5\n");
    EXPECT_THROW(io::read_points(in, 16, 3), ParseError);
  }
}

TEST(PointFile, RoundTripsUpToFortyBits) {
  Rng rng(1);
  for (unsigned w : {8u, 20u, 32u, 40u}) {
    const auto pts = random_points(rng, 200, 3, w);
    std::ostringstream out;
    io::write_points(out, pts, w);
    std::istringstream in(out.str());
    EXPECT_EQ(io::read_points(in, w, 3), pts) << "w=" << w;
  }
}

TEST(Format, DistanceNineDigits) {
  EXPECT_EQ(io::format_distance(25, 4), "0.3125");
  EXPECT_EQ(io::format_distance(SquaredDistance{2} << 32, 16), "1.41421356");
  EXPECT_EQ(io::format_distance(0, 16), "0");
}

TEST(Trace, ParsesAllOperations) {
  std::istringstream in(
      "# comment\n"
      "I R 0.5 0.5\n"
      "I B 0.25 0.75\n"
      "I 0.1 0.1\n"
      "\n"
      "P\n"
      "D 1\n"
      "Q 0.3 0.3\n");
  const auto ops = io::read_trace(in, 2, 16);
  ASSERT_EQ(ops.size(), 6u);
  EXPECT_EQ(ops[0].kind, io::TraceOp::Kind::insert);
  EXPECT_EQ(ops[0].color, Color::red);
  EXPECT_EQ(ops[1].color, Color::blue);
  EXPECT_EQ(ops[2].color, Color::red);
  EXPECT_EQ(ops[2].id, 2u);
  EXPECT_EQ(ops[2].point.id, 2u);
  EXPECT_EQ(ops[3].kind, io::TraceOp::Kind::report);
  EXPECT_EQ(ops[4].kind, io::TraceOp::Kind::erase);
  EXPECT_EQ(ops[4].id, 1u);
  EXPECT_EQ(ops[5].kind, io::TraceOp::Kind::query);
  EXPECT_EQ(ops[5].point.coords[0].raw, 19660u);
  EXPECT_EQ(ops[5].line, 8u);
}

TEST(Trace, Errors) {
  for (const char* bad : {"I 0.5\n", "D 0\n", "I 0.1 0.1\nD 0\nD 0\n", "X\n",
                          "P 1\n", "Q 0.5 1.5\n", "D x\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(io::read_trace(in, 2, 16), ParseError) << bad;
  }
}

}  // namespace
}  // namespace lso
