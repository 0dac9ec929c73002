#pragma once

// Dynamic (1+eps)-approximate closest pair (bichromatic or monochromatic)
// and dynamic (1+eps)-approximate nearest neighbor. Both keep one ordered
// store per ordering of the family; the closest pair additionally funnels
// every store's adjacency changes into one global candidate set.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lso/errors.hpp"
#include "lso/fixed_point.hpp"
#include "lso/ordered_store.hpp"
#include "lso/ordering_family.hpp"
#include "lso/point_pool.hpp"
#include "lso/slot_order.hpp"

namespace lso {

enum class Color : std::uint8_t { red, blue };

/// For the bichromatic variant `first` is red and `second` is blue.
struct PairReport {
  PointId first = 0;
  PointId second = 0;
  SquaredDistance sq = 0;
};

struct NeighborReport {
  PointId id = 0;
  SquaredDistance sq = 0;
  /// Predecessor/successor candidates looked at; at most 2 per ordering.
  std::size_t inspected = 0;
};

namespace detail {

inline void check_unshifted(const Point& p, unsigned w) {
  const std::uint64_t limit = std::uint64_t{1} << w;
  for (const Coord& c : p.coords) {
    if (c.raw >= limit) throw DomainError("coordinate outside [0, 1)");
  }
}

}  // namespace detail

template <bool Bichromatic>
class BasicClosestPair {
 public:
  explicit BasicClosestPair(OrderingFamily family)
      : family_(std::move(family)),
        pool_(family_.dim()),
        stores_(family_.size()) {}

  BasicClosestPair(const BasicClosestPair&) = delete;
  BasicClosestPair& operator=(const BasicClosestPair&) = delete;

  const OrderingFamily& family() const noexcept { return family_; }
  std::size_t size() const noexcept { return pool_.size(); }
  const PointPool& pool() const noexcept { return pool_; }
  const CandidatePairSet& candidates() const noexcept { return pairs_; }
  const OrderedStore<Color>& store(std::uint64_t ordering) const {
    return stores_.at(ordering);
  }

  void insert(const Point& p, Color color = Color::red) {
    if (p.dim() != family_.dim()) throw ArityError("point dimension");
    detail::check_unshifted(p, family_.bits());
    const Slot s = pool_.add(p);
    if (colors_.size() <= s) colors_.resize(s + 1);
    colors_[s] = color;
    for (std::uint64_t i = 0; i < stores_.size(); ++i) {
      const SlotOrder order{&family_, &pool_, family_.ordering(i)};
      pairs_.apply(stores_[i].insert(s, color, order), pool_, keep());
    }
  }

  void erase(PointId id) {
    const Slot s = pool_.slot_of(id);
    for (std::uint64_t i = 0; i < stores_.size(); ++i) {
      const SlotOrder order{&family_, &pool_, family_.ordering(i)};
      pairs_.apply(stores_[i].erase(s, order), pool_, keep());
    }
    pool_.remove(id);
  }

  Color color(PointId id) const { return colors_[pool_.slot_of(id)]; }

  /// The smallest candidate pair, or nothing when no qualifying pair exists.
  std::optional<PairReport> current() const {
    const auto best = pairs_.min();
    if (!best) return std::nullopt;
    PairReport r{best->pair.lo, best->pair.hi, best->sq};
    if constexpr (Bichromatic) {
      if (colors_[pool_.slot_of(r.first)] != Color::red) std::swap(r.first, r.second);
    }
    return r;
  }

 private:
  auto keep() const {
    return [this](Slot a, Slot b) {
      if constexpr (Bichromatic) {
        return colors_[a] != colors_[b];
      } else {
        return true;
      }
    };
  }

  OrderingFamily family_;
  PointPool pool_;
  std::vector<OrderedStore<Color>> stores_;
  std::vector<Color> colors_;
  CandidatePairSet pairs_;
};

using BichromaticClosestPair = BasicClosestPair<true>;
using ClosestPair = BasicClosestPair<false>;

class ApproxNearestNeighbor {
 public:
  explicit ApproxNearestNeighbor(OrderingFamily family)
      : family_(std::move(family)),
        pool_(family_.dim()),
        stores_(family_.size()) {}

  ApproxNearestNeighbor(const ApproxNearestNeighbor&) = delete;
  ApproxNearestNeighbor& operator=(const ApproxNearestNeighbor&) = delete;

  const OrderingFamily& family() const noexcept { return family_; }
  std::size_t size() const noexcept { return pool_.size(); }
  const PointPool& pool() const noexcept { return pool_; }
  const OrderedStore<>& store(std::uint64_t ordering) const {
    return stores_.at(ordering);
  }

  void insert(const Point& p) {
    if (p.dim() != family_.dim()) throw ArityError("point dimension");
    if (p.id == kProbeId) throw DomainError("point id is reserved for queries");
    detail::check_unshifted(p, family_.bits());
    const Slot s = pool_.add(p);
    for (std::uint64_t i = 0; i < stores_.size(); ++i) {
      const SlotOrder order{&family_, &pool_, family_.ordering(i)};
      stores_[i].insert(s, NoPayload{}, order);
    }
  }

  void erase(PointId id) {
    const Slot s = pool_.slot_of(id);
    for (std::uint64_t i = 0; i < stores_.size(); ++i) {
      const SlotOrder order{&family_, &pool_, family_.ordering(i)};
      stores_[i].erase(s, order);
    }
    pool_.remove(id);
  }

  /// Closest point among the predecessor and successor of q in every
  /// ordering.
  std::optional<NeighborReport> query(const Point& q) const {
    if (q.dim() != family_.dim()) throw ArityError("query dimension");
    detail::check_unshifted(q, family_.bits());
    if (pool_.size() == 0) return std::nullopt;
    std::uint64_t coords[kMaxDim];
    for (std::size_t i = 0; i < q.dim(); ++i) coords[i] = q.coords[i].raw;
    const std::span<const std::uint64_t> qc(coords, q.dim());

    std::optional<NeighborReport> best;
    std::size_t inspected = 0;
    auto consider = [&](const std::optional<OrderedStore<>::Entry>& e) {
      if (!e) return;
      ++inspected;
      const SquaredDistance sq = sq_dist(qc, pool_.coords(e->slot));
      const PointId id = pool_.id(e->slot);
      if (!best || sq < best->sq || (sq == best->sq && id < best->id)) {
        best = NeighborReport{id, sq, 0};
      }
    };
    for (std::uint64_t i = 0; i < stores_.size(); ++i) {
      const SlotOrder order{&family_, &pool_, family_.ordering(i)};
      const auto probe = order.probe(coords, kProbeId);
      consider(stores_[i].predecessor(probe));
      consider(stores_[i].successor(probe));
    }
    best->inspected = inspected;
    return best;
  }

 private:
  OrderingFamily family_;
  PointPool pool_;
  std::vector<OrderedStore<>> stores_;
};

}  // namespace lso
