#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "lso/ordered_store.hpp"
#include "lso/random_points.hpp"
#include "lso/slot_order.hpp"

namespace lso {
namespace {

using Pairs = std::vector<SlotPair>;

Pairs as_vector(std::span<const SlotPair> s) {
  Pairs v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

Point pt1(double x, PointId id) {
  const std::vector<double> c{x};
  return quantize(c, 16, 1, id);
}

// 1D, shift 0, one tree, identity child order: plain numeric order.
struct NumericLine : ::testing::Test {
  OrderingFamily family = OrderingFamily::with_exponent(1, 1, 16);
  PointPool pool{1};
  OrderedStore<> store;
  SlotOrder order{&family, &pool, Ordering{0, 0, 0}};

  Slot add(double x, PointId id) { return pool.add(pt1(x, id)); }
};

TEST_F(NumericLine, InsertIntoEmpty) {
  const auto d = store.insert(add(0.5, 0), {}, order);
  EXPECT_TRUE(d.empty());
}

TEST_F(NumericLine, InsertBetween) {
  const Slot a = add(0.25, 0);
  const Slot b = add(0.75, 1);
  store.insert(a, {}, order);
  store.insert(b, {}, order);
  const Slot x = add(0.5, 2);
  const auto d = store.insert(x, {}, order);
  EXPECT_EQ(as_vector(d.removed()), (Pairs{SlotPair::of(a, b)}));
  EXPECT_EQ(as_vector(d.added()), (Pairs{SlotPair::of(a, x), SlotPair::of(x, b)}));
}

TEST_F(NumericLine, InsertAfterLast) {
  const Slot y = add(0.25, 0);
  store.insert(y, {}, order);
  const Slot x = add(0.5, 1);
  const auto d = store.insert(x, {}, order);
  EXPECT_TRUE(d.removed().empty());
  EXPECT_EQ(as_vector(d.added()), (Pairs{SlotPair::of(y, x)}));
}

TEST_F(NumericLine, EraseOnly) {
  const Slot a = add(0.5, 0);
  store.insert(a, {}, order);
  EXPECT_TRUE(store.erase(a, order).empty());
  EXPECT_TRUE(store.empty());
}

TEST_F(NumericLine, EraseMiddle) {
  const Slot a = add(0.25, 0);
  const Slot x = add(0.5, 1);
  const Slot b = add(0.75, 2);
  for (Slot s : {a, x, b}) store.insert(s, {}, order);
  const auto d = store.erase(x, order);
  EXPECT_EQ(as_vector(d.removed()), (Pairs{SlotPair::of(a, x), SlotPair::of(x, b)}));
  EXPECT_EQ(as_vector(d.added()), (Pairs{SlotPair::of(a, b)}));
}

TEST_F(NumericLine, EraseEndpoint) {
  const Slot a = add(0.25, 0);
  const Slot b = add(0.75, 1);
  store.insert(a, {}, order);
  store.insert(b, {}, order);
  const auto d = store.erase(b, order);
  EXPECT_EQ(d.removed().size(), 1u);
  EXPECT_TRUE(d.added().empty());
}

TEST_F(NumericLine, DuplicateAndMissingLeaveStoreUnchanged) {
  const Slot a = add(0.25, 0);
  const Slot b = add(0.75, 1);
  store.insert(a, {}, order);
  EXPECT_THROW(store.insert(a, {}, order), DuplicateError);
  EXPECT_THROW(store.erase(b, order), NotFoundError);
  EXPECT_EQ(store.size(), 1u);
  ASSERT_EQ(store.entries().size(), 1u);
  EXPECT_EQ(store.entries()[0].slot, a);
}

TEST_F(NumericLine, EmptyQueries) {
  const std::uint64_t q[1] = {100};
  const auto probe = order.probe(q, kProbeId);
  EXPECT_FALSE(store.predecessor(probe));
  EXPECT_FALSE(store.successor(probe));
}

TEST_F(NumericLine, PredecessorAndSuccessor) {
  const Slot a = add(0.25, 0);
  const Slot b = add(0.5, 1);
  store.insert(a, {}, order);
  store.insert(b, {}, order);
  const Point q = pt1(0.3, kProbeId);
  const std::uint64_t raw[1] = {q.coords[0].raw};
  const auto probe = order.probe(raw, kProbeId);
  EXPECT_EQ(store.predecessor(probe)->slot, a);
  EXPECT_EQ(store.successor(probe)->slot, b);
}

TEST_F(NumericLine, ProbeEqualToStoredPointSortsAfterIt) {
  const Slot a = add(0.25, 0);
  const Slot b = add(0.5, 1);
  store.insert(a, {}, order);
  store.insert(b, {}, order);
  const std::uint64_t raw[1] = {pool.raw(a)[0]};
  const auto probe = order.probe(raw, kProbeId);
  EXPECT_EQ(store.predecessor(probe)->slot, a);
  EXPECT_EQ(store.successor(probe)->slot, b);
}

// Random churn in a 2D ordering; after every operation the store must
// iterate in (ordering, id) order and queries must match a linear scan.
TEST(OrderedStore, MatchesSortedVectorUnderChurn) {
  Rng rng(101);
  const auto family = OrderingFamily::with_exponent(2, 2, 10);
  for (int round = 0; round < 6; ++round) {
    PointPool pool(2);
    OrderedStore<int> store;
    const SlotOrder order{&family, &pool, family.ordering(rng() % family.size())};
    std::vector<Slot> live;
    PointId next = 0;
    for (int step = 0; step < 600; ++step) {
      if (live.empty() || rng() % 3 != 0) {
        Point p = random_point(rng, 2, 10, next++);
        if (!live.empty() && rng() % 4 == 0) {
          p.coords = pool.point(live[rng() % live.size()]).coords;
        }
        const Slot s = pool.add(p);
        const auto d = store.insert(s, static_cast<int>(p.id), order);
        ASSERT_LE(d.removed().size(), 1u);
        ASSERT_LE(d.added().size(), 2u);
        live.push_back(s);
      } else {
        const std::size_t at = rng() % live.size();
        const Slot s = live[at];
        const auto d = store.erase(s, order);
        ASSERT_LE(d.removed().size(), 2u);
        ASSERT_LE(d.added().size(), 1u);
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(at));
        pool.remove(pool.id(s));
      }
      std::vector<Slot> expected = live;
      std::sort(expected.begin(), expected.end(),
                [&](Slot a, Slot b) { return order(a, b) < 0; });
      std::vector<Slot> got;
      for (const auto& e : store.entries()) {
        got.push_back(e.slot);
        ASSERT_EQ(static_cast<PointId>(e.payload), pool.id(e.slot));
      }
      ASSERT_EQ(got, expected);
      ASSERT_LE(store.height(), 1.45 * std::log2(static_cast<double>(live.size()) + 2) + 1);

      // Probe with random coordinates and with coordinates of a stored
      // point, under a small id and the probe id.
      std::uint64_t q[2] = {rng() >> 54, rng() >> 54};
      if (!live.empty() && rng() % 2) {
        const auto* c = pool.raw(live[rng() % live.size()]);
        q[0] = c[0];
        q[1] = c[1];
      }
      for (PointId qid : {PointId{0}, kProbeId}) {
        const auto probe = order.probe(q, qid);
        std::optional<Slot> pred;
        std::optional<Slot> succ;
        for (Slot s : expected) {
          const auto c = probe(s);
          if (c > 0) pred = s;
          if (c < 0 && !succ) succ = s;
        }
        const auto p = store.predecessor(probe);
        const auto n = store.successor(probe);
        ASSERT_EQ(p.has_value(), pred.has_value());
        ASSERT_EQ(n.has_value(), succ.has_value());
        if (pred) { ASSERT_EQ(p->slot, *pred); }
        if (succ) { ASSERT_EQ(n->slot, *succ); }
      }
    }
  }
}

TEST(CandidatePairSet, EmptyDeltaChangesNothing) {
  PointPool pool(1);
  CandidatePairSet set;
  set.apply(AdjacencyDelta{}, pool, [](Slot, Slot) { return true; });
  EXPECT_TRUE(set.empty());
  EXPECT_FALSE(set.min());
}

TEST(CandidatePairSet, Refcount) {
  CandidatePairSet set;
  const IdPair p = IdPair::of(4, 2);
  set.add(p, 9);
  set.add(p, 9);
  set.remove(p);
  EXPECT_EQ(set.multiplicity(p), 1u);
  ASSERT_TRUE(set.min());
  EXPECT_EQ(set.min()->pair, p);
  set.remove(p);
  EXPECT_TRUE(set.empty());
  EXPECT_THROW(set.remove(p), ConsistencyError);
}

TEST(CandidatePairSet, FilterAndMinTieBreak) {
  PointPool pool(1);
  const Slot a = pool.add(pt1(0.0, 10));
  const Slot b = pool.add(pt1(0.5, 11));
  const Slot c = pool.add(pt1(0.5, 12));
  CandidatePairSet set;
  AdjacencyDelta d;
  d.add(a, b);
  d.add(b, c);
  set.apply(d, pool, [&](Slot x, Slot y) { return x != c && y != c; });
  ASSERT_EQ(set.size(), 1u);
  EXPECT_EQ(set.min()->pair, IdPair::of(10, 11));
  set.add(IdPair::of(3, 9), set.min()->sq);
  EXPECT_EQ(set.min()->pair, IdPair::of(3, 9));
}

// Many short random sequences over every ordering of a small family; the
// pair-set minimum must equal the smallest adjacent pair found by
// re-sorting every ordering from scratch.
TEST(CandidatePairSet, MinMatchesFullRecomputation) {
  Rng rng(7);
  const auto family = OrderingFamily::with_exponent(2, 1, 12);
  for (int seq = 0; seq < 1000; ++seq) {
    PointPool pool(2);
    std::vector<OrderedStore<>> stores(family.size());
    CandidatePairSet set;
    std::vector<PointId> live;
    PointId next = 0;
    const auto keep = [](Slot, Slot) { return true; };
    for (int step = 0; step < 256; ++step) {
      if (live.size() < 2 || (live.size() < 40 && rng() % 2)) {
        const Slot s = pool.add(random_point(rng, 2, 12, next));
        live.push_back(next++);
        for (std::uint64_t i = 0; i < family.size(); ++i) {
          const SlotOrder o{&family, &pool, family.ordering(i)};
          set.apply(stores[i].insert(s, {}, o), pool, keep);
        }
      } else {
        const std::size_t at = rng() % live.size();
        const Slot s = pool.slot_of(live[at]);
        for (std::uint64_t i = 0; i < family.size(); ++i) {
          const SlotOrder o{&family, &pool, family.ordering(i)};
          set.apply(stores[i].erase(s, o), pool, keep);
        }
        pool.remove(live[at]);
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(at));
      }
      if (step % 32 != 31) continue;
      std::map<IdPair, std::uint32_t> expected;
      for (std::uint64_t i = 0; i < family.size(); ++i) {
        const SlotOrder o{&family, &pool, family.ordering(i)};
        std::vector<Slot> slots;
        for (PointId id : live) slots.push_back(pool.slot_of(id));
        std::sort(slots.begin(), slots.end(), [&](Slot a, Slot b) { return o(a, b) < 0; });
        for (std::size_t r = 0; r + 1 < slots.size(); ++r) {
          ++expected[IdPair::of(pool.id(slots[r]), pool.id(slots[r + 1]))];
        }
      }
      ASSERT_EQ(set.size(), expected.size());
      std::optional<std::pair<SquaredDistance, IdPair>> best;
      for (const auto& [pair, mult] : expected) {
        ASSERT_EQ(set.multiplicity(pair), mult);
        const auto sq = pool.sq_dist(pool.slot_of(pair.lo), pool.slot_of(pair.hi));
        if (!best || std::pair(sq, pair) < *best) best = std::pair(sq, pair);
      }
      ASSERT_TRUE(set.min());
      ASSERT_EQ(set.min()->sq, best->first);
      ASSERT_EQ(set.min()->pair, best->second);
    }
  }
}

}  // namespace
}  // namespace lso
