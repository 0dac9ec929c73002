#pragma once

// Spanners from locality-sensitive orderings. In every ordering each point
// is joined to its k+1 nearest predecessors and successors (k = 0 gives the
// plain (1+eps)-spanner, k > 0 a k-vertex-fault-tolerant one). An edge is
// kept while at least one (ordering, pair) witness exists.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lso/errors.hpp"
#include "lso/fixed_point.hpp"
#include "lso/ordered_store.hpp"
#include "lso/ordering_family.hpp"
#include "lso/point_pool.hpp"
#include "lso/slot_order.hpp"

namespace lso {

/// Undirected edge with u < v.
struct Edge {
  PointId u = 0;
  PointId v = 0;
  SquaredDistance sq = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct WitnessedEdge {
  Edge edge;
  std::uint32_t witnesses = 0;

  friend bool operator==(const WitnessedEdge&, const WitnessedEdge&) = default;
};

/// Edges whose witness count moved between zero and non-zero in one update.
struct EdgeDelta {
  std::vector<Edge> added;
  std::vector<Edge> removed;

  std::size_t size() const noexcept { return added.size() + removed.size(); }
};

class DynamicSpanner {
 public:
  explicit DynamicSpanner(OrderingFamily family, std::size_t fault_tolerance = 0)
      : family_(std::move(family)),
        k_(fault_tolerance),
        pool_(family_.dim()),
        stores_(family_.size()) {}

  DynamicSpanner(const DynamicSpanner&) = delete;
  DynamicSpanner& operator=(const DynamicSpanner&) = delete;

  const OrderingFamily& family() const noexcept { return family_; }
  std::size_t fault_tolerance() const noexcept { return k_; }
  std::size_t size() const noexcept { return pool_.size(); }
  const PointPool& pool() const noexcept { return pool_; }

  EdgeDelta insert(const Point& p) {
    if (p.dim() != family_.dim()) throw ArityError("point dimension");
    const std::uint64_t limit = std::uint64_t{1} << family_.bits();
    for (const Coord& c : p.coords) {
      if (c.raw >= limit) throw DomainError("coordinate outside [0, 1)");
    }
    const Slot x = pool_.add(p);
    if (degree_.size() <= x) degree_.resize(x + 1, 0);
    EdgeDelta delta;
    for (std::uint64_t i = 0; i < stores_.size(); ++i) {
      const SlotOrder order{&family_, &pool_, family_.ordering(i)};
      neighbors(stores_[i], order, x);
      // Pairs exactly k+2 apart after x lands between them lose a witness.
      for (std::size_t a = 0; a < before_.size(); ++a) {
        const std::size_t b = k_ - a;
        if (b < after_.size()) unwitness(before_[a], after_[b], delta);
      }
      for (Slot a : before_) witness(x, a, delta);
      for (Slot b : after_) witness(x, b, delta);
      stores_[i].insert(x, NoPayload{}, order);
    }
    log(delta);
    return delta;
  }

  EdgeDelta erase(PointId id) {
    const Slot x = pool_.slot_of(id);
    EdgeDelta delta;
    for (std::uint64_t i = 0; i < stores_.size(); ++i) {
      const SlotOrder order{&family_, &pool_, family_.ordering(i)};
      neighbors(stores_[i], order, x);
      stores_[i].erase(x, order);
      for (Slot a : before_) unwitness(x, a, delta);
      for (Slot b : after_) unwitness(x, b, delta);
      for (std::size_t a = 0; a < before_.size(); ++a) {
        const std::size_t b = k_ - a;
        if (b < after_.size()) witness(before_[a], after_[b], delta);
      }
    }
    pool_.remove(id);
    log(delta);
    return delta;
  }

  /// Every live edge once, sorted by (u, v).
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& [pair, info] : edges_) out.push_back({pair.lo, pair.hi, info.sq});
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
      return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    return out;
  }

  std::vector<WitnessedEdge> witnessed_edges() const {
    std::vector<WitnessedEdge> out;
    out.reserve(edges_.size());
    for (const auto& [pair, info] : edges_) {
      out.push_back({{pair.lo, pair.hi, info.sq}, info.witnesses});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return a.edge.u != b.edge.u ? a.edge.u < b.edge.u : a.edge.v < b.edge.v;
    });
    return out;
  }

  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::uint32_t witnesses(PointId u, PointId v) const {
    const auto it = edges_.find(IdPair::of(u, v));
    return it == edges_.end() ? 0 : it->second.witnesses;
  }

  std::size_t degree(PointId id) const { return degree_[pool_.slot_of(id)]; }

  std::size_t max_degree() const {
    std::size_t best = 0;
    pool_.for_each([&](Slot s) { best = std::max<std::size_t>(best, degree_[s]); });
    return best;
  }

  std::vector<Point> points() const {
    std::vector<Point> out;
    pool_.for_each([&](Slot s) { out.push_back(pool_.point(s)); });
    return out;
  }

  void set_delta_logging(bool on) { logging_ = on; }
  const std::vector<EdgeDelta>& delta_log() const noexcept { return log_; }
  void clear_delta_log() { log_.clear(); }

 private:
  struct EdgeInfo {
    SquaredDistance sq;
    std::uint32_t witnesses;
  };

  /// Fills before_/after_ with the up to k+1 nearest stored slots on each
  /// side of x, nearest first. x itself is never included.
  void neighbors(const OrderedStore<>& store, const SlotOrder& order, Slot x) {
    before_.clear();
    after_.clear();
    Slot cur = x;
    while (before_.size() <= k_) {
      const auto e = store.predecessor(order.probe(cur));
      if (!e) break;
      before_.push_back(e->slot);
      cur = e->slot;
    }
    cur = x;
    while (after_.size() <= k_) {
      const auto e = store.successor(order.probe(cur));
      if (!e) break;
      after_.push_back(e->slot);
      cur = e->slot;
    }
  }

  void witness(Slot a, Slot b, EdgeDelta& delta) {
    const IdPair pair = IdPair::of(pool_.id(a), pool_.id(b));
    auto [it, fresh] = edges_.try_emplace(pair, EdgeInfo{0, 0});
    if (fresh) {
      it->second.sq = pool_.sq_dist(a, b);
      ++degree_[a];
      ++degree_[b];
      delta.added.push_back({pair.lo, pair.hi, it->second.sq});
    }
    ++it->second.witnesses;
  }

  void unwitness(Slot a, Slot b, EdgeDelta& delta) {
    const IdPair pair = IdPair::of(pool_.id(a), pool_.id(b));
    const auto it = edges_.find(pair);
    if (it == edges_.end()) {
      throw ConsistencyError("spanner edge (" + std::to_string(pair.lo) + ", " +
                             std::to_string(pair.hi) + ") has no witness");
    }
    if (--it->second.witnesses == 0) {
      --degree_[a];
      --degree_[b];
      delta.removed.push_back({pair.lo, pair.hi, it->second.sq});
      edges_.erase(it);
    }
  }

  void log(const EdgeDelta& delta) {
    if (logging_) log_.push_back(delta);
  }

  OrderingFamily family_;
  std::size_t k_;
  PointPool pool_;
  std::vector<OrderedStore<>> stores_;
  std::unordered_map<IdPair, EdgeInfo, IdPairHash> edges_;
  std::vector<std::uint32_t> degree_;
  std::vector<Slot> before_;
  std::vector<Slot> after_;
  bool logging_ = false;
  std::vector<EdgeDelta> log_;
};

namespace detail {

inline void check_distinct_ids(std::span<const Point> points) {
  std::unordered_set<PointId> seen;
  for (const Point& p : points) {
    if (!seen.insert(p.id).second) {
      throw DuplicateError("point id " + std::to_string(p.id) + " repeated");
    }
  }
}

/// Indices of `points` sorted by (ordering, id).
inline std::vector<std::uint32_t> sort_by(const OrderingFamily& family,
                                          const Ordering& o,
                                          std::span<const std::uint64_t> flat,
                                          std::span<const Point> points) {
  const std::size_t d = family.dim();
  std::vector<std::uint32_t> idx(points.size());
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    const auto c = family.compare_raw(o, flat.data() + a * d, flat.data() + b * d);
    if (c != 0) return c < 0;
    return points[a].id < points[b].id;
  });
  return idx;
}

inline std::vector<std::uint64_t> flatten(std::span<const Point> points,
                                          std::size_t dim) {
  std::vector<std::uint64_t> flat;
  flat.reserve(points.size() * dim);
  for (const Point& p : points) {
    if (p.dim() != dim) throw ArityError("point dimension");
    for (const Coord& c : p.coords) flat.push_back(c.raw);
  }
  return flat;
}

}  // namespace detail

/// From-scratch construction: sort once per ordering and link every pair
/// at most k+1 positions apart. Sorted by (u, v).
inline std::vector<WitnessedEdge> build_static_spanner(
    const OrderingFamily& family, std::span<const Point> points,
    std::size_t fault_tolerance = 0) {
  detail::check_distinct_ids(points);
  const auto flat = detail::flatten(points, family.dim());
  std::unordered_map<IdPair, WitnessedEdge, IdPairHash> acc;
  for (const Ordering& o : family.orderings()) {
    const auto idx = detail::sort_by(family, o, flat, points);
    for (std::size_t r = 0; r < idx.size(); ++r) {
      for (std::size_t t = 1; t <= fault_tolerance + 1 && r + t < idx.size(); ++t) {
        const Point& a = points[idx[r]];
        const Point& b = points[idx[r + t]];
        const IdPair pair = IdPair::of(a.id, b.id);
        auto [it, fresh] = acc.try_emplace(pair);
        if (fresh) it->second.edge = {pair.lo, pair.hi, sq_dist(a, b)};
        ++it->second.witnesses;
      }
    }
  }
  std::vector<WitnessedEdge> out;
  out.reserve(acc.size());
  for (auto& [pair, e] : acc) out.push_back(e);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.edge.u != b.edge.u ? a.edge.u < b.edge.u : a.edge.v < b.edge.v;
  });
  return out;
}

struct MstResult {
  std::vector<Edge> edges;
  long double weight = 0.0L;
};

/// Kruskal over an edge list; `ids` lists the vertices.
inline MstResult minimum_spanning_forest(std::span<const PointId> ids,
                                         std::vector<Edge> edges, unsigned w) {
  std::unordered_map<PointId, std::uint32_t> index;
  for (PointId id : ids) index.emplace(id, static_cast<std::uint32_t>(index.size()));
  std::vector<std::uint32_t> parent(index.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto root = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.sq != b.sq) return a.sq < b.sq;
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  MstResult out;
  for (const Edge& e : edges) {
    const std::uint32_t ru = root(index.at(e.u));
    const std::uint32_t rv = root(index.at(e.v));
    if (ru == rv) continue;
    parent[ru] = rv;
    out.edges.push_back(e);
    out.weight += to_length(e.sq, w);
  }
  return out;
}

/// Approximate Euclidean MST: the MST of the static (1+eps)-spanner.
inline MstResult approx_mst(std::span<const Point> points, double eps_target,
                            unsigned w) {
  if (points.size() <= 1) {
    detail::check_distinct_ids(points);
    return {};
  }
  const auto family = OrderingFamily::build(points.front().dim(), eps_target, w);
  const auto spanner = build_static_spanner(family, points, 0);
  std::vector<Edge> edges;
  edges.reserve(spanner.size());
  for (const auto& e : spanner) edges.push_back(e.edge);
  std::vector<PointId> ids;
  ids.reserve(points.size());
  for (const Point& p : points) ids.push_back(p.id);
  return minimum_spanning_forest(ids, std::move(edges), w);
}

}  // namespace lso
