#pragma once

#include <compare>
#include <cstdint>
#include <limits>

#include "lso/ordering_family.hpp"
#include "lso/point_pool.hpp"

namespace lso {

/// Id reserved for query probes; it sorts after every stored point with
/// the same coordinates.
inline constexpr PointId kProbeId = std::numeric_limits<PointId>::max();

/// Strict total order on pool slots under one ordering: the ordering
/// first, ids to break ties between equal coordinates.
struct SlotOrder {
  const OrderingFamily* family;
  const PointPool* pool;
  Ordering ordering;

  std::strong_ordering operator()(Slot a, Slot b) const noexcept {
    if (a == b) return std::strong_ordering::equal;
    const auto c = family->compare_raw(ordering, pool->raw(a), pool->raw(b));
    if (c != 0) return c;
    return pool->id(a) <=> pool->id(b);
  }

  /// Orders slot `a` against stored slot t; usable as a store probe.
  auto probe(Slot a) const {
    return [this, a](Slot t) { return (*this)(a, t); };
  }

  /// Orders free coordinates with the given id against stored slot t.
  auto probe(const std::uint64_t* coords, PointId id) const {
    return [this, coords, id](Slot t) {
      const auto c = family->compare_raw(ordering, coords, pool->raw(t));
      if (c != 0) return c;
      return id <=> pool->id(t);
    };
  }
};

}  // namespace lso
