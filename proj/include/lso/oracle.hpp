#pragma once

// Brute-force references. Slow, but each one is written against the
// definitions directly and shares no code path with the structure it
// checks (the LSO pair check relies on the comparator, which is itself
// cross-checked against reference_dfs_order).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include <boost/rational.hpp>

#include "lso/fixed_point.hpp"
#include "lso/ordering_family.hpp"
#include "lso/proximity.hpp"
#include "lso/spanner.hpp"
#include "lso/walecki.hpp"

namespace lso::oracle {

/// Closest red/blue pair; ties broken by (red id, blue id).
inline std::optional<PairReport> exact_bcp(std::span<const Point> red,
                                           std::span<const Point> blue) {
  std::optional<PairReport> best;
  for (const Point& r : red) {
    for (const Point& b : blue) {
      const SquaredDistance sq = sq_dist(r, b);
      if (!best || sq < best->sq ||
          (sq == best->sq && std::pair(r.id, b.id) < std::pair(best->first, best->second))) {
        best = PairReport{r.id, b.id, sq};
      }
    }
  }
  return best;
}

/// Closest pair of one point set.
inline std::optional<PairReport> exact_closest_pair(std::span<const Point> points) {
  std::optional<PairReport> best;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const SquaredDistance sq = sq_dist(points[i], points[j]);
      if (!best || sq < best->sq) {
        best = PairReport{std::min(points[i].id, points[j].id),
                          std::max(points[i].id, points[j].id), sq};
      }
    }
  }
  return best;
}

inline std::optional<NeighborReport> exact_nn(std::span<const Point> points,
                                              const Point& q) {
  std::optional<NeighborReport> best;
  for (const Point& p : points) {
    const SquaredDistance sq = sq_dist(p, q);
    if (!best || sq < best->sq || (sq == best->sq && p.id < best->id)) {
      best = NeighborReport{p.id, sq, 0};
    }
  }
  if (best) best->inspected = points.size();
  return best;
}

/// Largest ratio of graph distance to Euclidean distance over all pairs of
/// `points` (Floyd-Warshall). Edges touching ids outside `points` are
/// ignored, so passing P \ F yields the dilation of G \ F. Coincident
/// points count as ratio 1 when connected. +inf when disconnected.
inline long double dilation(std::span<const Point> points,
                            std::span<const Edge> edges, unsigned w) {
  const std::size_t n = points.size();
  if (n < 2) return 1.0L;
  std::unordered_map<PointId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(points[i].id, i);
  constexpr long double inf = std::numeric_limits<long double>::infinity();
  std::vector<long double> dist(n * n, inf);
  for (std::size_t i = 0; i < n; ++i) dist[i * n + i] = 0.0L;
  for (const Edge& e : edges) {
    const auto a = index.find(e.u);
    const auto b = index.find(e.v);
    if (a == index.end() || b == index.end()) continue;
    const long double len = to_length(e.sq, w);
    long double& ab = dist[a->second * n + b->second];
    ab = std::min(ab, len);
    dist[b->second * n + a->second] = ab;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const long double ik = dist[i * n + k];
      if (ik == inf) continue;
      long double* row = &dist[i * n];
      const long double* krow = &dist[k * n];
      for (std::size_t j = 0; j < n; ++j) {
        const long double via = ik + krow[j];
        if (via < row[j]) row[j] = via;
      }
    }
  }
  long double worst = 1.0L;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const long double g = dist[i * n + j];
      if (g == inf) return inf;
      const long double euclid = to_length(sq_dist(points[i], points[j]), w);
      if (euclid == 0.0L) continue;
      worst = std::max(worst, g / euclid);
    }
  }
  return worst;
}

namespace detail {

using Wide = unsigned __int128;

struct DfsContext {
  std::span<const Point> points;
  std::vector<std::vector<Wide>> scaled;  // shifted coords times 2^E
  unsigned exponent;
  const ChildPermutation* perm;
  std::vector<PointId>* out;
};

inline void dfs(const DfsContext& ctx, std::vector<std::size_t> members,
                const std::vector<Wide>& origin, Wide side) {
  if (members.size() <= 1 ||
      std::all_of(members.begin(), members.end(), [&](std::size_t m) {
        return ctx.scaled[m] == ctx.scaled[members.front()];
      })) {
    std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      return ctx.points[a].id < ctx.points[b].id;
    });
    for (std::size_t m : members) ctx.out->push_back(ctx.points[m].id);
    return;
  }
  const Wide child_side = side >> ctx.exponent;
  if (child_side == 0) throw ConsistencyError("quadtree split below resolution");
  const std::size_t dim = origin.size();
  std::map<std::uint64_t, std::vector<std::size_t>> buckets;
  for (std::size_t m : members) {
    std::uint64_t child = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      const Wide digit = (ctx.scaled[m][i] - origin[i]) / child_side;
      child += static_cast<std::uint64_t>(digit) << (ctx.exponent * i);
    }
    buckets[child].push_back(m);
  }
  const std::uint64_t grid = std::uint64_t{1} << ctx.exponent;
  for (std::uint64_t child : ctx.perm->path) {
    const auto it = buckets.find(child);
    if (it == buckets.end()) continue;
    std::vector<Wide> sub(dim);
    std::uint64_t rest = child;
    for (std::size_t i = 0; i < dim; ++i) {
      sub[i] = origin[i] + static_cast<Wide>(rest % grid) * child_side;
      rest /= grid;
    }
    dfs(ctx, std::move(it->second), sub, child_side);
  }
}

}  // namespace detail

/// Explicit eps-quadtree walk: shift the points, build tree `tree` over
/// [0, 2^(E-tree))^d splitting every cell into a 2^E grid per axis, and
/// list the points in depth-first order visiting children along `perm`.
inline std::vector<PointId> reference_dfs_order(std::span<const Point> points,
                                                const ShiftTable& shifts,
                                                std::size_t shift,
                                                unsigned exponent, unsigned tree,
                                                const ChildPermutation& perm) {
  std::vector<PointId> out;
  if (points.empty()) return out;
  const std::size_t dim = points.front().dim();
  const unsigned w = shifts.bits();
  detail::DfsContext ctx{points, {}, exponent, &perm, &out};
  ctx.scaled.reserve(points.size());
  for (const Point& p : points) {
    std::vector<detail::Wide> c;
    for (const Coord& x : p.coords) {
      c.push_back(static_cast<detail::Wide>(x.raw + shifts[shift]) << exponent);
    }
    ctx.scaled.push_back(std::move(c));
  }
  // Root side 2^(E - tree) in real units.
  const detail::Wide side = detail::Wide{1} << (exponent - tree + w + exponent);
  std::vector<std::size_t> members(points.size());
  for (std::size_t i = 0; i < members.size(); ++i) members[i] = i;
  detail::dfs(ctx, std::move(members), std::vector<detail::Wide>(dim, 0), side);
  return out;
}

namespace detail {

inline bool between_points_close(const OrderingFamily& family, const Ordering& o,
                                 std::span<const Point> points, std::size_t p,
                                 std::size_t q, long double eps) {
  auto less = [&](std::size_t a, std::size_t b) {
    const auto c = family.compare(o, points[a], points[b]);
    if (c != 0) return c < 0;
    return points[a].id < points[b].id;
  };
  const std::size_t lo = less(p, q) ? p : q;
  const std::size_t hi = lo == p ? q : p;
  const long double bound =
      eps * eps * static_cast<long double>(sq_dist(points[p], points[q]));
  for (std::size_t r = 0; r < points.size(); ++r) {
    if (r == p || r == q || !less(lo, r) || !less(r, hi)) continue;
    const auto near = std::min(sq_dist(points[p], points[r]),
                               sq_dist(points[q], points[r]));
    if (static_cast<long double>(near) > bound) return false;
  }
  return true;
}

}  // namespace detail

/// True iff some ordering of the family keeps every point strictly between
/// points[p] and points[q] within eps * |pq| of one of them.
inline bool check_lso_pair_property(const OrderingFamily& family,
                                    std::span<const Point> points, std::size_t p,
                                    std::size_t q, double eps) {
  for (const Ordering& o : family.orderings()) {
    if (detail::between_points_close(family, o, points, p, q, eps)) return true;
  }
  return false;
}

/// Same predicate as check_lso_pair_property for many pairs of one point
/// set: every ordering is sorted once up front. For each pair the
/// orderings in which the pair's separating child cells are adjacent are
/// tried first, then all the others.
class LsoPairChecker {
 public:
  LsoPairChecker(const OrderingFamily& family, std::span<const Point> points)
      : family_(family), points_(points) {
    const std::size_t n = points.size();
    const auto flat = lso::detail::flatten(points, family.dim());
    order_.resize(family.size() * n);
    position_.resize(family.size() * n);
    for (std::uint64_t s = 0; s < family.size(); ++s) {
      const auto idx = lso::detail::sort_by(family, family.ordering(s), flat, points);
      for (std::size_t r = 0; r < n; ++r) {
        order_[s * n + r] = static_cast<std::uint32_t>(idx[r]);
        position_[s * n + idx[r]] = static_cast<std::uint32_t>(r);
      }
    }
  }

  bool holds(std::size_t p, std::size_t q, double eps) const {
    const long double bound =
        static_cast<long double>(eps) * eps *
        static_cast<long double>(sq_dist(points_[p], points_[q]));
    std::vector<std::uint64_t> tried;
    const ShiftTable& shifts = family_.shifts();
    const std::size_t d = family_.dim();
    std::uint64_t a[kMaxDim];
    std::uint64_t b[kMaxDim];
    bool same = true;
    for (std::size_t i = 0; i < d; ++i) {
      same = same && points_[p].coords[i] == points_[q].coords[i];
    }
    if (!same) {
      for (std::size_t s = 0; s < shifts.count(); ++s) {
        for (std::size_t i = 0; i < d; ++i) {
          a[i] = points_[p].coords[i].raw + shifts[s];
          b[i] = points_[q].coords[i].raw + shifts[s];
        }
        for (unsigned t = 0; t < family_.exponent(); ++t) {
          const Separation sep = family_.separate(t, a, b);
          const std::uint64_t k =
              walecki_path_joining(family_.children(), sep.child_a, sep.child_b);
          const std::uint64_t index = family_.index_of(Ordering{s, t, k});
          if (protects(index, p, q, bound)) return true;
          tried.push_back(index);
        }
      }
    }
    std::sort(tried.begin(), tried.end());
    for (std::uint64_t s = 0; s < family_.size(); ++s) {
      if (std::binary_search(tried.begin(), tried.end(), s)) continue;
      if (protects(s, p, q, bound)) return true;
    }
    return false;
  }

 private:
  bool protects(std::uint64_t s, std::size_t p, std::size_t q,
                long double bound) const {
    const std::size_t n = points_.size();
    std::uint32_t lo = position_[s * n + p];
    std::uint32_t hi = position_[s * n + q];
    if (lo > hi) std::swap(lo, hi);
    for (std::uint32_t r = lo + 1; r < hi; ++r) {
      const Point& x = points_[order_[s * n + r]];
      const auto near = std::min(sq_dist(points_[p], x), sq_dist(points_[q], x));
      if (static_cast<long double>(near) > bound) return false;
    }
    return true;
  }

  const OrderingFamily& family_;
  std::span<const Point> points_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> position_;
};

/// Checks that {i/n mod 2^-l : i < n} equals {2^-l * i/n : i < n} exactly,
/// for odd n.
inline bool shift_residues_check(long long n, unsigned l) {
  if (n < 3 || n % 2 == 0) throw DomainError("residue check needs odd n >= 3");
  if (l > 16) throw DomainError("residue check supports l <= 16");
  using Q = boost::rational<long long>;
  const Q alpha(1, 1LL << l);
  std::set<Q> residues;
  std::set<Q> scaled;
  for (long long i = 0; i < n; ++i) {
    const Q x(i, n);
    const Q quotient = x / alpha;
    const long long whole = quotient.numerator() / quotient.denominator();
    residues.insert(x - alpha * whole);
    scaled.insert(alpha * x);
  }
  return residues == scaled;
}

/// Weight of the Euclidean MST over the complete graph (Prim, O(n^2)).
inline long double exact_mst_weight(std::span<const Point> points, unsigned w) {
  const std::size_t n = points.size();
  if (n <= 1) return 0.0L;
  std::vector<bool> in_tree(n, false);
  std::vector<SquaredDistance> best(n, std::numeric_limits<SquaredDistance>::max());
  best[0] = 0;
  long double total = 0.0L;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!in_tree[i] && (pick == n || best[i] < best[pick])) pick = i;
    }
    in_tree[pick] = true;
    total += to_length(best[pick], w);
    for (std::size_t i = 0; i < n; ++i) {
      if (!in_tree[i]) best[i] = std::min(best[i], sq_dist(points[pick], points[i]));
    }
  }
  return total;
}

}  // namespace lso::oracle
