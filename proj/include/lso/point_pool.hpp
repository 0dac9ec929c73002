#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lso/errors.hpp"
#include "lso/fixed_point.hpp"

namespace lso {

/// Dense handle for a live point inside one structure.
using Slot = std::uint32_t;

/// Live points of one structure, stored flat and addressed by slot.
/// Slots are recycled after removal.
class PointPool {
 public:
  explicit PointPool(std::size_t dim = 1) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return index_.size(); }
  bool contains(PointId id) const { return index_.contains(id); }

  Slot add(const Point& p) {
    if (p.dim() != dim_) {
      throw ArityError("point has dimension " + std::to_string(p.dim()) +
                       ", structure has " + std::to_string(dim_));
    }
    if (index_.contains(p.id)) {
      throw DuplicateError("point id " + std::to_string(p.id) +
                           " already present");
    }
    Slot s;
    if (!free_.empty()) {
      s = free_.back();
      free_.pop_back();
    } else {
      s = static_cast<Slot>(ids_.size());
      ids_.push_back(0);
      live_.push_back(false);
      coords_.resize(coords_.size() + dim_);
    }
    ids_[s] = p.id;
    live_[s] = true;
    for (std::size_t i = 0; i < dim_; ++i) coords_[s * dim_ + i] = p.coords[i].raw;
    index_.emplace(p.id, s);
    return s;
  }

  Slot slot_of(PointId id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) {
      throw NotFoundError("point id " + std::to_string(id) + " not present");
    }
    return it->second;
  }

  std::optional<Slot> find(PointId id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  void remove(PointId id) {
    const Slot s = slot_of(id);
    index_.erase(id);
    live_[s] = false;
    free_.push_back(s);
  }

  PointId id(Slot s) const noexcept { return ids_[s]; }
  const std::uint64_t* raw(Slot s) const noexcept {
    return coords_.data() + static_cast<std::size_t>(s) * dim_;
  }
  std::span<const std::uint64_t> coords(Slot s) const noexcept {
    return {raw(s), dim_};
  }

  Point point(Slot s) const {
    Point p;
    p.id = ids_[s];
    p.coords.reserve(dim_);
    for (std::uint64_t c : coords(s)) p.coords.push_back(Coord{c});
    return p;
  }

  SquaredDistance sq_dist(Slot a, Slot b) const noexcept {
    return lso::sq_dist(coords(a), coords(b));
  }

  /// Largest slot ever handed out plus one.
  std::size_t capacity() const noexcept { return ids_.size(); }
  bool live(Slot s) const noexcept { return s < live_.size() && live_[s]; }

  template <class F>
  void for_each(F&& f) const {
    for (Slot s = 0; s < ids_.size(); ++s) {
      if (live_[s]) f(s);
    }
  }

 private:
  std::size_t dim_;
  std::vector<std::uint64_t> coords_;
  std::vector<PointId> ids_;
  std::vector<bool> live_;
  std::vector<Slot> free_;
  std::unordered_map<PointId, Slot> index_;
};

}  // namespace lso
