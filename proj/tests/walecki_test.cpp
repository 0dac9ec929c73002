#include <gtest/gtest.h>

#include <set>
#include <utility>
#include <vector>

#include "lso/walecki.hpp"

namespace lso {
namespace {

using Paths = std::vector<std::vector<std::uint64_t>>;

Paths just_paths(const std::vector<ChildPermutation>& perms) {
  Paths out;
  for (const auto& p : perms) out.push_back(p.path);
  return out;
}

TEST(Walecki, TwoChildren) {
  EXPECT_EQ(just_paths(walecki_paths(2)), (Paths{{0, 1}}));
}

TEST(Walecki, FourChildren) {
  EXPECT_EQ(just_paths(walecki_paths(4)), (Paths{{0, 1, 3, 2}, {1, 2, 0, 3}}));
}

TEST(Walecki, RejectsOddOrTiny) {
  EXPECT_THROW(walecki_paths(0), DomainError);
  EXPECT_THROW(walecki_paths(1), DomainError);
  EXPECT_THROW(walecki_paths(7), DomainError);
}

class WaleckiCover : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(WaleckiCover, HamiltonianDisjointAndCovering) {
  const std::uint64_t n = GetParam();
  const auto perms = walecki_paths(n);
  ASSERT_EQ(perms.size(), n / 2);
  std::set<std::pair<std::uint64_t, std::uint64_t>> edges;
  std::size_t total = 0;
  for (const auto& p : perms) {
    ASSERT_EQ(p.path.size(), n);
    EXPECT_EQ(std::set<std::uint64_t>(p.path.begin(), p.path.end()).size(), n);
    for (std::uint64_t r = 0; r + 1 < n; ++r) {
      const auto a = std::min(p.path[r], p.path[r + 1]);
      const auto b = std::max(p.path[r], p.path[r + 1]);
      edges.emplace(a, b);
      ++total;
    }
  }
  EXPECT_EQ(total, n * (n - 1) / 2);
  EXPECT_EQ(edges.size(), n * (n - 1) / 2);
}

TEST_P(WaleckiCover, ClosedFormRankMatchesPath) {
  const std::uint64_t n = GetParam();
  for (const auto& p : walecki_paths(n)) {
    const std::uint64_t k = p.path.front();
    for (std::uint64_t c = 0; c < n; ++c) {
      ASSERT_EQ(walecki_rank(n, k, c), p.rank[c]);
      ASSERT_EQ(p.path[p.rank[c]], c);
    }
  }
}

TEST_P(WaleckiCover, JoiningPathContainsEdge) {
  const std::uint64_t n = GetParam();
  const auto perms = walecki_paths(n);
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = a + 1; b < n; ++b) {
      const auto& p = perms.at(walecki_path_joining(n, a, b));
      const auto ra = p.rank[a];
      const auto rb = p.rank[b];
      ASSERT_EQ(ra > rb ? ra - rb : rb - ra, 1u) << a << " " << b;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, WaleckiCover, ::testing::Values(2, 4, 8, 16, 64));

}  // namespace
}  // namespace lso
