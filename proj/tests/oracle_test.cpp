#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "lso/oracle.hpp"
#include "lso/random_points.hpp"

namespace lso {
namespace {

Point raw_point(std::vector<std::uint64_t> values, PointId id) {
  Point p;
  p.id = id;
  for (auto v : values) p.coords.push_back(Coord{v});
  return p;
}

TEST(ExactBcp, Singletons) {
  const std::vector<Point> r{raw_point({0, 0}, 1)};
  const std::vector<Point> b{raw_point({3, 4}, 2)};
  const auto got = oracle::exact_bcp(r, b);
  ASSERT_TRUE(got);
  EXPECT_EQ(got->first, 1u);
  EXPECT_EQ(got->second, 2u);
  EXPECT_EQ(got->sq, 25u);
  EXPECT_FALSE(oracle::exact_bcp({}, b));
  EXPECT_FALSE(oracle::exact_bcp(r, {}));
}

TEST(ExactBcp, AgreesWithIndependentDoubleLoop) {
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    auto red = random_points(rng, 64, 2, 20);
    auto blue = random_points(rng, 64, 2, 20);
    for (auto& p : blue) p.id += 64;
    SquaredDistance best = std::numeric_limits<SquaredDistance>::max();
    for (const Point& a : red) {
      for (const Point& b : blue) {
        SquaredDistance s = 0;
        for (std::size_t i = 0; i < 2; ++i) {
          const auto d = static_cast<__int128>(a.coords[i].raw) - b.coords[i].raw;
          s += static_cast<SquaredDistance>(d * d);
        }
        best = std::min(best, s);
      }
    }
    EXPECT_EQ(oracle::exact_bcp(red, blue)->sq, best);
  }
}

TEST(ExactNn, Examples) {
  const std::vector<Point> one{raw_point({7, 7}, 3)};
  EXPECT_EQ(oracle::exact_nn(one, raw_point({100, 0}, 0))->id, 3u);
  EXPECT_FALSE(oracle::exact_nn({}, raw_point({1, 1}, 0)));
  Rng rng(2);
  const auto pts = random_points(rng, 40, 3, 24);
  EXPECT_EQ(oracle::exact_nn(pts, pts[17])->sq, 0u);
  for (int t = 0; t < 50; ++t) {
    const Point q = random_point(rng, 3, 24, 1000);
    const std::vector<Point> qs{q};
    EXPECT_EQ(oracle::exact_nn(pts, q)->sq, oracle::exact_bcp(qs, pts)->sq);
  }
}

TEST(Dilation, CompleteGraphIsOne) {
  Rng rng(3);
  const auto pts = random_points(rng, 12, 2, 20);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      edges.push_back({pts[i].id, pts[j].id, sq_dist(pts[i], pts[j])});
    }
  }
  EXPECT_DOUBLE_EQ(static_cast<double>(oracle::dilation(pts, edges, 20)), 1.0);
}

TEST(Dilation, TwoPointsOneEdge) {
  const std::vector<Point> pts{raw_point({0, 0}, 0), raw_point({3, 4}, 1)};
  const std::vector<Edge> edges{{0, 1, 25}};
  EXPECT_DOUBLE_EQ(static_cast<double>(oracle::dilation(pts, edges, 8)), 1.0);
}

TEST(Dilation, CollinearPathWithoutOuterEdge) {
  const std::vector<Point> pts{raw_point({0}, 0), raw_point({5}, 1), raw_point({9}, 2)};
  const std::vector<Edge> edges{{0, 1, 25}, {1, 2, 16}};
  EXPECT_NEAR(static_cast<double>(oracle::dilation(pts, edges, 8)), 1.0, 1e-15);
}

TEST(Dilation, DetourAndDisconnection) {
  // Unit square corners joined around three sides: opposite corners on the
  // open side are 3 apart in the graph, 1 in the plane.
  const std::uint64_t s = 100;
  const std::vector<Point> pts{raw_point({0, 0}, 0), raw_point({s, 0}, 1),
                               raw_point({s, s}, 2), raw_point({0, s}, 3)};
  const std::vector<Edge> edges{{0, 1, s * s}, {1, 2, s * s}, {2, 3, s * s}};
  EXPECT_NEAR(static_cast<double>(oracle::dilation(pts, edges, 8)), 3.0, 1e-12);
  const std::vector<Edge> partial{{0, 1, s * s}};
  EXPECT_TRUE(std::isinf(oracle::dilation(pts, partial, 8)));
  // Dropping vertex 3 leaves a connected path.
  const std::vector<Point> rest(pts.begin(), pts.begin() + 3);
  EXPECT_NEAR(static_cast<double>(oracle::dilation(rest, edges, 8)), 2.0 / std::sqrt(2.0),
              1e-12);
}

TEST(ReferenceDfs, OneDimensionalIdentityIsNumericSort) {
  const auto f = OrderingFamily::with_exponent(1, 1, 16);
  Rng rng(4);
  auto pts = random_points(rng, 100, 1, 16);
  pts.push_back(pts[3]);
  pts.back().id = 100;
  auto order = oracle::reference_dfs_order(pts, f.shifts(), 0, 1, 0, f.permutation(0));
  auto expected = pts;
  std::sort(expected.begin(), expected.end(), [](const Point& a, const Point& b) {
    return a.coords[0].raw != b.coords[0].raw ? a.coords[0].raw < b.coords[0].raw
                                              : a.id < b.id;
  });
  ASSERT_EQ(order.size(), expected.size());
  for (std::size_t i = 0; i < order.size(); ++i) EXPECT_EQ(order[i], expected[i].id);
}

TEST(LsoPairProperty, TwoPointsAlwaysHold) {
  const auto f = OrderingFamily::with_exponent(2, 1, 16);
  const std::vector<Point> pts{raw_point({0, 0}, 0), raw_point({60000, 100}, 1)};
  EXPECT_TRUE(oracle::check_lso_pair_property(f, pts, 0, 1, 0.01));
}

TEST(LsoPairProperty, CheckerAgreesWithBruteForce) {
  const auto f = OrderingFamily::with_exponent(2, 1, 16);
  Rng rng(5);
  const auto pts = random_points(rng, 30, 2, 16);
  const oracle::LsoPairChecker checker(f, pts);
  int held = 0;
  int failed = 0;
  for (double eps : {0.05, 0.3, 1.0}) {
    for (std::size_t p = 0; p < pts.size(); ++p) {
      for (std::size_t q = p + 1; q < pts.size(); ++q) {
        const bool slow = oracle::check_lso_pair_property(f, pts, p, q, eps);
        ASSERT_EQ(checker.holds(p, q, eps), slow) << p << " " << q << " " << eps;
        (slow ? held : failed)++;
      }
    }
  }
  // The coarse family must fail for some pairs at small eps, or the check
  // would be vacuous.
  EXPECT_GT(held, 0);
  EXPECT_GT(failed, 0);
}

TEST(ShiftResidues, Examples) {
  EXPECT_TRUE(oracle::shift_residues_check(3, 0));
  EXPECT_TRUE(oracle::shift_residues_check(3, 1));
  EXPECT_TRUE(oracle::shift_residues_check(5, 3));
  EXPECT_THROW(oracle::shift_residues_check(4, 1), DomainError);
  EXPECT_THROW(oracle::shift_residues_check(3, 17), DomainError);
}

TEST(ExactMst, Examples) {
  EXPECT_EQ(oracle::exact_mst_weight({}, 8), 0.0L);
  const std::vector<Point> one{raw_point({1, 1}, 0)};
  EXPECT_EQ(oracle::exact_mst_weight(one, 8), 0.0L);
  const std::vector<Point> two{raw_point({0, 0}, 0), raw_point({3, 4}, 1)};
  EXPECT_NEAR(static_cast<double>(oracle::exact_mst_weight(two, 8)), 5.0 / 256, 1e-15);
  // Unit square: the grid point 2^w stands in for coordinate 1.
  const std::uint64_t one_unit = std::uint64_t{1} << 8;
  const std::vector<Point> square{raw_point({0, 0}, 0), raw_point({one_unit, 0}, 1),
                                  raw_point({0, one_unit}, 2),
                                  raw_point({one_unit, one_unit}, 3)};
  EXPECT_DOUBLE_EQ(static_cast<double>(oracle::exact_mst_weight(square, 8)), 3.0);
}

}  // namespace
}  // namespace lso
