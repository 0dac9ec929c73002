#pragma once

// Per-ordering ordered set of points (an AVL tree over pool slots) that
// reports which adjacencies every update breaks and creates, and the
// reference-counted candidate pair set shared by all orderings.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lso/errors.hpp"
#include "lso/fixed_point.hpp"
#include "lso/point_pool.hpp"

namespace lso {

struct NoPayload {
  friend bool operator==(NoPayload, NoPayload) = default;
};

/// Unordered pair stored as (smaller, larger).
template <class Key>
struct UnorderedPair {
  Key lo{};
  Key hi{};

  static constexpr UnorderedPair of(Key a, Key b) noexcept {
    return a < b ? UnorderedPair{a, b} : UnorderedPair{b, a};
  }

  friend constexpr auto operator<=>(const UnorderedPair&,
                                    const UnorderedPair&) = default;
};

using IdPair = UnorderedPair<PointId>;
using SlotPair = UnorderedPair<Slot>;

struct IdPairHash {
  std::size_t operator()(const IdPair& p) const noexcept {
    std::uint64_t h = p.lo * 0x9E3779B97F4A7C15ULL;
    h ^= p.hi + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// Adjacency changes caused by one update of one ordered store. An insert
/// breaks at most one adjacency and creates at most two; a delete is the
/// mirror image.
class AdjacencyDelta {
 public:
  void remove(Slot a, Slot b) { removed_[n_removed_++] = SlotPair::of(a, b); }
  void add(Slot a, Slot b) { added_[n_added_++] = SlotPair::of(a, b); }

  std::span<const SlotPair> removed() const noexcept {
    return {removed_.data(), n_removed_};
  }
  std::span<const SlotPair> added() const noexcept {
    return {added_.data(), n_added_};
  }
  bool empty() const noexcept { return n_removed_ == 0 && n_added_ == 0; }

 private:
  std::array<SlotPair, 2> removed_{};
  std::array<SlotPair, 2> added_{};
  std::uint8_t n_removed_ = 0;
  std::uint8_t n_added_ = 0;
};

/// Balanced ordered set of slots. The order is supplied per call as a
/// three-way comparator over slots, which must be a strict total order
/// consistent across calls (ordering, then id).
template <class Payload = NoPayload>
class OrderedStore {
 public:
  struct Entry {
    Slot slot;
    Payload payload;
  };

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  template <class Cmp>
  AdjacencyDelta insert(Slot s, Payload payload, const Cmp& cmp) {
    Index pred = kNil;
    Index succ = kNil;
    root_ = insert_at(root_, s, payload, cmp, pred, succ);
    ++size_;
    AdjacencyDelta delta;
    if (pred != kNil && succ != kNil) delta.remove(key(pred), key(succ));
    if (pred != kNil) delta.add(key(pred), s);
    if (succ != kNil) delta.add(s, key(succ));
    return delta;
  }

  template <class Cmp>
  AdjacencyDelta erase(Slot s, const Cmp& cmp) {
    std::optional<Slot> pred;
    std::optional<Slot> succ;
    root_ = erase_at(root_, s, cmp, pred, succ);
    --size_;
    AdjacencyDelta delta;
    if (pred) delta.remove(*pred, s);
    if (succ) delta.remove(s, *succ);
    if (pred && succ) delta.add(*pred, *succ);
    return delta;
  }

  /// Nearest stored entry strictly before the probe. `probe(t)` orders the
  /// probe against stored slot t.
  template <class Probe>
  std::optional<Entry> predecessor(const Probe& probe) const {
    Index best = kNil;
    for (Index n = root_; n != kNil;) {
      if (probe(nodes_[n].key) > 0) {
        best = n;
        n = nodes_[n].right;
      } else {
        n = nodes_[n].left;
      }
    }
    return entry(best);
  }

  template <class Probe>
  std::optional<Entry> successor(const Probe& probe) const {
    Index best = kNil;
    for (Index n = root_; n != kNil;) {
      if (probe(nodes_[n].key) < 0) {
        best = n;
        n = nodes_[n].left;
      } else {
        n = nodes_[n].right;
      }
    }
    return entry(best);
  }

  template <class Probe>
  std::optional<Entry> find(const Probe& probe) const {
    for (Index n = root_; n != kNil;) {
      const auto c = probe(nodes_[n].key);
      if (c == 0) return entry(n);
      n = c < 0 ? nodes_[n].left : nodes_[n].right;
    }
    return std::nullopt;
  }

  template <class F>
  void for_each(F&& f) const {
    std::vector<Index> stack;
    Index n = root_;
    while (n != kNil || !stack.empty()) {
      while (n != kNil) {
        stack.push_back(n);
        n = nodes_[n].left;
      }
      n = stack.back();
      stack.pop_back();
      f(Entry{nodes_[n].key, nodes_[n].payload});
      n = nodes_[n].right;
    }
  }

  std::vector<Entry> entries() const {
    std::vector<Entry> out;
    out.reserve(size_);
    for_each([&](const Entry& e) { out.push_back(e); });
    return out;
  }

  /// Height of the tree; 0 when empty.
  int height() const noexcept { return height_of(root_); }

 private:
  using Index = std::uint32_t;
  static constexpr Index kNil = ~Index{0};

  struct Node {
    Slot key;
    Index left;
    Index right;
    std::int8_t height;
    [[no_unique_address]] Payload payload;
  };

  Slot key(Index n) const noexcept { return nodes_[n].key; }

  std::optional<Entry> entry(Index n) const {
    if (n == kNil) return std::nullopt;
    return Entry{nodes_[n].key, nodes_[n].payload};
  }

  Index allocate(Slot s, Payload payload) {
    const Node node{s, kNil, kNil, 1, payload};
    if (!free_.empty()) {
      const Index n = free_.back();
      free_.pop_back();
      nodes_[n] = node;
      return n;
    }
    nodes_.push_back(node);
    return static_cast<Index>(nodes_.size() - 1);
  }

  int height_of(Index n) const noexcept {
    return n == kNil ? 0 : nodes_[n].height;
  }

  void update(Index n) noexcept {
    nodes_[n].height = static_cast<std::int8_t>(
        1 + std::max(height_of(nodes_[n].left), height_of(nodes_[n].right)));
  }

  Index rotate_right(Index n) noexcept {
    const Index l = nodes_[n].left;
    nodes_[n].left = nodes_[l].right;
    nodes_[l].right = n;
    update(n);
    update(l);
    return l;
  }

  Index rotate_left(Index n) noexcept {
    const Index r = nodes_[n].right;
    nodes_[n].right = nodes_[r].left;
    nodes_[r].left = n;
    update(n);
    update(r);
    return r;
  }

  Index rebalance(Index n) noexcept {
    update(n);
    const int balance = height_of(nodes_[n].left) - height_of(nodes_[n].right);
    if (balance > 1) {
      const Index l = nodes_[n].left;
      if (height_of(nodes_[l].left) < height_of(nodes_[l].right)) {
        nodes_[n].left = rotate_left(l);
      }
      return rotate_right(n);
    }
    if (balance < -1) {
      const Index r = nodes_[n].right;
      if (height_of(nodes_[r].right) < height_of(nodes_[r].left)) {
        nodes_[n].right = rotate_right(r);
      }
      return rotate_left(n);
    }
    return n;
  }

  template <class Cmp>
  Index insert_at(Index n, Slot s, Payload payload, const Cmp& cmp,
                  Index& pred, Index& succ) {
    if (n == kNil) return allocate(s, payload);
    const auto c = cmp(s, nodes_[n].key);
    if (c == 0) {
      throw DuplicateError("slot " + std::to_string(s) + " already stored");
    }
    if (c < 0) {
      succ = n;
      const Index child = insert_at(nodes_[n].left, s, payload, cmp, pred, succ);
      nodes_[n].left = child;
    } else {
      pred = n;
      const Index child = insert_at(nodes_[n].right, s, payload, cmp, pred, succ);
      nodes_[n].right = child;
    }
    return rebalance(n);
  }

  Index leftmost(Index n) const noexcept {
    while (nodes_[n].left != kNil) n = nodes_[n].left;
    return n;
  }

  Index rightmost(Index n) const noexcept {
    while (nodes_[n].right != kNil) n = nodes_[n].right;
    return n;
  }

  Index detach_leftmost(Index n) noexcept {
    if (nodes_[n].left == kNil) return nodes_[n].right;
    nodes_[n].left = detach_leftmost(nodes_[n].left);
    return rebalance(n);
  }

  template <class Cmp>
  Index erase_at(Index n, Slot s, const Cmp& cmp, std::optional<Slot>& pred,
                 std::optional<Slot>& succ) {
    if (n == kNil) {
      throw NotFoundError("slot " + std::to_string(s) + " not stored");
    }
    const auto c = cmp(s, nodes_[n].key);
    if (c < 0) {
      succ = nodes_[n].key;
      nodes_[n].left = erase_at(nodes_[n].left, s, cmp, pred, succ);
      return rebalance(n);
    }
    if (c > 0) {
      pred = nodes_[n].key;
      nodes_[n].right = erase_at(nodes_[n].right, s, cmp, pred, succ);
      return rebalance(n);
    }
    const Index left = nodes_[n].left;
    const Index right = nodes_[n].right;
    if (left != kNil) pred = nodes_[rightmost(left)].key;
    if (right != kNil) succ = nodes_[leftmost(right)].key;
    free_.push_back(n);
    if (left == kNil) return right;
    if (right == kNil) return left;
    const Index m = leftmost(right);
    nodes_[m].right = detach_leftmost(right);
    nodes_[m].left = left;
    return rebalance(m);
  }

  std::vector<Node> nodes_;
  std::vector<Index> free_;
  Index root_ = kNil;
  std::size_t size_ = 0;
};

/// A candidate pair as reported by the priority view.
struct Candidate {
  IdPair pair;
  SquaredDistance sq = 0;
};

/// Pairs adjacent in at least one ordering, with the number of orderings
/// that witness each, and a min view by (squared distance, ids).
class CandidatePairSet {
 public:
  void add(IdPair pair, SquaredDistance sq) {
    auto [it, fresh] = active_.try_emplace(pair, Info{sq, 0});
    if (fresh) by_distance_.emplace(sq, pair);
    ++it->second.multiplicity;
  }

  void remove(IdPair pair) {
    const auto it = active_.find(pair);
    if (it == active_.end()) {
      throw ConsistencyError("removing absent candidate pair (" +
                             std::to_string(pair.lo) + ", " +
                             std::to_string(pair.hi) + ")");
    }
    if (--it->second.multiplicity == 0) {
      by_distance_.erase({it->second.sq, pair});
      active_.erase(it);
    }
  }

  /// Applies one store delta. `keep(a, b)` selects which slot pairs count
  /// (e.g. only bichromatic ones).
  template <class Filter>
  void apply(const AdjacencyDelta& delta, const PointPool& pool,
             const Filter& keep) {
    for (const SlotPair& p : delta.removed()) {
      if (keep(p.lo, p.hi)) remove(IdPair::of(pool.id(p.lo), pool.id(p.hi)));
    }
    for (const SlotPair& p : delta.added()) {
      if (keep(p.lo, p.hi)) {
        add(IdPair::of(pool.id(p.lo), pool.id(p.hi)), pool.sq_dist(p.lo, p.hi));
      }
    }
  }

  std::optional<Candidate> min() const {
    if (by_distance_.empty()) return std::nullopt;
    const auto& [sq, pair] = *by_distance_.begin();
    return Candidate{pair, sq};
  }

  std::uint32_t multiplicity(IdPair pair) const {
    const auto it = active_.find(pair);
    return it == active_.end() ? 0 : it->second.multiplicity;
  }

  std::size_t size() const noexcept { return active_.size(); }
  bool empty() const noexcept { return active_.empty(); }

  template <class F>
  void for_each(F&& f) const {
    for (const auto& [pair, info] : active_) f(pair, info.sq, info.multiplicity);
  }

 private:
  struct Info {
    SquaredDistance sq;
    std::uint32_t multiplicity;
  };

  std::unordered_map<IdPair, Info, IdPairHash> active_;
  std::set<std::pair<SquaredDistance, IdPair>> by_distance_;
};

}  // namespace lso
