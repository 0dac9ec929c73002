#pragma once

// Decomposition of the complete graph K_n (n even) into n/2 edge-disjoint
// Hamiltonian paths. Path k visits k, k+1, k-1, k+2, k-2, ..., k+n/2
// (mod n). Every edge {a, b} of path k has a + b = 2k or 2k + 1 (mod n),
// which is what makes the paths disjoint and gives the closed forms below.

#include <cstdint>
#include <string>
#include <vector>

#include "lso/errors.hpp"

namespace lso {

/// One ordering of the n children of a grid cell.
struct ChildPermutation {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> path;  // path[r] = child visited r-th
  std::vector<std::uint64_t> rank;  // rank[path[r]] = r
};

inline void check_walecki_size(std::uint64_t n) {
  if (n < 2 || n % 2 != 0) {
    throw DomainError("Walecki decomposition needs an even n >= 2, got " +
                      std::to_string(n));
  }
}

/// Position of `child` on zigzag path k of K_n. n must be a power of two.
constexpr std::uint64_t walecki_rank(std::uint64_t n, std::uint64_t k,
                                     std::uint64_t child) noexcept {
  const std::uint64_t delta = (child - k) & (n - 1);
  if (delta == 0) return 0;
  if (delta <= n / 2) return 2 * delta - 1;
  return 2 * (n - delta);
}

/// Index of the path on which children a != b are adjacent.
constexpr std::uint64_t walecki_path_joining(std::uint64_t n, std::uint64_t a,
                                             std::uint64_t b) noexcept {
  return ((a + b) % n) / 2;
}

inline ChildPermutation walecki_path(std::uint64_t n, std::uint64_t k) {
  check_walecki_size(n);
  ChildPermutation p;
  p.n = n;
  p.path.reserve(n);
  p.path.push_back(k % n);
  for (std::uint64_t t = 1; p.path.size() < n; ++t) {
    p.path.push_back((k + t) % n);
    if (p.path.size() < n) p.path.push_back((k + n - t) % n);
  }
  p.rank.assign(n, 0);
  for (std::uint64_t r = 0; r < n; ++r) p.rank[p.path[r]] = r;
  return p;
}

inline std::vector<ChildPermutation> walecki_paths(std::uint64_t n) {
  check_walecki_size(n);
  std::vector<ChildPermutation> out;
  out.reserve(n / 2);
  for (std::uint64_t k = 0; k < n / 2; ++k) out.push_back(walecki_path(n, k));
  return out;
}

}  // namespace lso
