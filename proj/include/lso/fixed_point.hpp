#pragma once

// Fixed-point coordinates in [0, 2) with w fractional bits, plus the
// bitwise machinery (msb comparison, common quadtree cell depth) that the
// orderings are built on.

#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lso/errors.hpp"

namespace lso {

using PointId = std::uint64_t;

/// Exact squared distance in units of 2^(-2w).
using SquaredDistance = unsigned __int128;

inline constexpr unsigned kMinBits = 1;
inline constexpr unsigned kMaxBits = 62;

/// A coordinate raw / 2^w. Unshifted inputs satisfy raw < 2^w.
struct Coord {
  std::uint64_t raw = 0;

  friend constexpr auto operator<=>(Coord, Coord) = default;
};

struct Point {
  std::vector<Coord> coords;
  PointId id = 0;

  std::size_t dim() const noexcept { return coords.size(); }

  friend bool operator==(const Point&, const Point&) = default;
};

inline void check_bits(unsigned w) {
  if (w < kMinBits || w > kMaxBits) {
    throw DomainError("fractional bit count " + std::to_string(w) +
                      " outside [" + std::to_string(kMinBits) + ", " +
                      std::to_string(kMaxBits) + "]");
  }
}

/// raw = floor(x * 2^w) for every x in [0, 1).
inline Point quantize(std::span<const double> reals, unsigned w,
                      PointId id = 0) {
  check_bits(w);
  if (reals.empty()) throw ArityError("point needs at least one coordinate");
  Point p;
  p.id = id;
  p.coords.reserve(reals.size());
  const double scale = std::ldexp(1.0, static_cast<int>(w));
  for (double x : reals) {
    if (!(x >= 0.0 && x < 1.0)) {
      throw DomainError("coordinate " + std::to_string(x) +
                        " outside [0, 1)");
    }
    // Scaling by a power of two is exact, so floor sees the true product.
    p.coords.push_back(
        Coord{static_cast<std::uint64_t>(std::floor(x * scale))});
  }
  return p;
}

inline Point quantize(std::span<const double> reals, unsigned w,
                      std::size_t expected_dim, PointId id) {
  if (reals.size() != expected_dim) {
    throw ArityError("expected " + std::to_string(expected_dim) +
                     " coordinates, got " + std::to_string(reals.size()));
  }
  return quantize(reals, w, id);
}

inline double to_real(Coord c, unsigned w) {
  return std::ldexp(static_cast<double>(c.raw), -static_cast<int>(w));
}

enum class MsbOrder { a_more_significant, equal_level, b_more_significant };

/// Compares the most significant set bits of two coordinates with only
/// xor, and, and ordinary comparisons. msb(0) is treated as +infinity.
constexpr MsbOrder cmp_msb(Coord a, Coord b) noexcept {
  const std::uint64_t x = a.raw ^ b.raw;
  if (a.raw < b.raw && a.raw < x) return MsbOrder::b_more_significant;
  if (b.raw < a.raw && b.raw < x) return MsbOrder::a_more_significant;
  return MsbOrder::equal_level;
}

/// The diagonal shifts v_i = (i/(D+1), ..., i/(D+1)), rounded to w bits.
class ShiftTable {
 public:
  ShiftTable() = default;

  ShiftTable(std::size_t dim, unsigned w) : dim_(dim), bits_(w) {
    check_bits(w);
    if (dim == 0) throw ArityError("dimension must be at least 1");
    const std::uint64_t denom = count();
    shifts_.reserve(denom);
    for (std::uint64_t i = 0; i < denom; ++i) {
      // round(i * 2^w / (D+1)); D+1 is odd so there is never a tie.
      const unsigned __int128 num = static_cast<unsigned __int128>(i) << (w + 1);
      shifts_.push_back(
          static_cast<std::uint64_t>((num + denom) / (2 * denom)));
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  unsigned bits() const noexcept { return bits_; }
  /// D = 2 * ceil(d / 2).
  std::size_t max_index() const noexcept { return 2 * ((dim_ + 1) / 2); }
  std::size_t count() const noexcept { return max_index() + 1; }
  std::uint64_t operator[](std::size_t i) const { return shifts_.at(i); }
  std::span<const std::uint64_t> values() const noexcept { return shifts_; }

 private:
  std::size_t dim_ = 0;
  unsigned bits_ = 0;
  std::vector<std::uint64_t> shifts_;
};

inline Point shift_point(const Point& p, std::size_t i,
                         const ShiftTable& table) {
  if (i >= table.count()) {
    throw IndexError("shift index " + std::to_string(i) + " outside [0, " +
                     std::to_string(table.max_index()) + "]");
  }
  if (p.dim() != table.dim()) throw ArityError("point/shift table dimension");
  const std::uint64_t limit = std::uint64_t{1} << table.bits();
  Point out = p;
  for (Coord& c : out.coords) {
    if (c.raw >= limit) throw DomainError("point is already outside [0, 1)");
    c.raw += table[i];
  }
  return out;
}

inline void check_same_arity(const Point& p, const Point& q) {
  if (p.dim() != q.dim()) {
    throw ArityError("dimension mismatch: " + std::to_string(p.dim()) +
                     " vs " + std::to_string(q.dim()));
  }
}

/// Depth of the first differing bit over all axes; the bit of weight 2^0
/// has depth 0 and the bit of weight 2^-w has depth w. Equal points give
/// w + 1. The smallest canonical cell of [0,2)^d holding both points has
/// side 2^-(m-1).
inline unsigned common_cell_depth(const Point& p, const Point& q, unsigned w) {
  check_same_arity(p, q);
  std::uint64_t diff = 0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    diff |= p.coords[i].raw ^ q.coords[i].raw;
  }
  if (diff == 0) return w + 1;
  const auto top = static_cast<unsigned>(std::bit_width(diff) - 1);
  return w - top;
}

inline SquaredDistance sq_dist(std::span<const std::uint64_t> a,
                               std::span<const std::uint64_t> b) noexcept {
  SquaredDistance s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t d = a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
    s += static_cast<SquaredDistance>(d) * d;
  }
  return s;
}

inline SquaredDistance sq_dist(const Point& p, const Point& q) {
  check_same_arity(p, q);
  SquaredDistance s = 0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const std::uint64_t a = p.coords[i].raw;
    const std::uint64_t b = q.coords[i].raw;
    const std::uint64_t d = a > b ? a - b : b - a;
    s += static_cast<SquaredDistance>(d) * d;
  }
  return s;
}

/// Euclidean length in real units; the one rounding step for reporting.
inline long double to_length(SquaredDistance sq, unsigned w) {
  return std::ldexp(std::sqrt(static_cast<long double>(sq)),
                    -static_cast<int>(w));
}

inline std::string to_string(SquaredDistance v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

}  // namespace lso
