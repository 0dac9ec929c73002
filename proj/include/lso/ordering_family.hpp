#pragma once

// The family of locality-sensitive orderings of [0,1)^d.
//
// A member is a triple (shift i, tree j, child permutation k). Points are
// shifted by the diagonal vector v_i and then ordered by a depth-first walk
// of the j-th eps-quadtree over [0, 2^(E-j))^d, visiting the 2^(E*d)
// children of every cell in the order of Walecki path k.
//
// Tree j owns the regular-quadtree levels congruent to j mod E. In bit
// terms, block 0 of tree j holds bit depths 0..j (zero extended to E bits)
// and block l >= 1 holds depths j+(l-1)E+1 .. j+lE.

#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <iterator>
#include <string>

#include "lso/errors.hpp"
#include "lso/fixed_point.hpp"
#include "lso/walecki.hpp"

namespace lso {

inline constexpr std::size_t kMaxDim = 8;
/// Cap on E*d, i.e. at most 2^24 children per cell.
inline constexpr unsigned kMaxChildBits = 24;

struct Ordering {
  std::size_t shift = 0;
  unsigned tree = 0;
  std::uint64_t perm = 0;

  friend bool operator==(const Ordering&, const Ordering&) = default;
};

/// Where two distinct shifted points part ways in one ordering: the block
/// of the tree and the child cells they fall into.
struct Separation {
  unsigned block = 0;
  std::uint64_t child_a = 0;
  std::uint64_t child_b = 0;
};

/// (D+1) * E * 2^(E*d - 1).
inline std::uint64_t family_size(std::size_t dim, unsigned exponent) {
  const std::uint64_t shifts = 2 * ((dim + 1) / 2) + 1;
  return shifts * exponent * (std::uint64_t{1} << (exponent * dim - 1));
}

class OrderingFamily {
 public:
  class View;

  /// eps_internal is the largest power of two not exceeding
  /// eps_target / (2 (D+1) sqrt(d)).
  static OrderingFamily build(std::size_t dim, double eps_target,
                              unsigned w) {
    check_dim(dim);
    check_bits(w);
    if (!(eps_target > 0.0 && eps_target < 1.0)) {
      throw DomainError("eps must lie in (0, 1), got " +
                        std::to_string(eps_target));
    }
    const double shifts = static_cast<double>(2 * ((dim + 1) / 2) + 1);
    const double scaled =
        eps_target / (2.0 * shifts * std::sqrt(static_cast<double>(dim)));
    unsigned e = 1;
    while (std::ldexp(1.0, -static_cast<int>(e)) > scaled) ++e;
    OrderingFamily f(dim, e, w);
    f.eps_target_ = eps_target;
    return f;
  }

  /// Family with eps_internal = 2^-exponent given directly.
  static OrderingFamily with_exponent(std::size_t dim, unsigned exponent,
                                      unsigned w) {
    check_dim(dim);
    check_bits(w);
    return OrderingFamily(dim, exponent, w);
  }

  std::size_t dim() const noexcept { return dim_; }
  unsigned bits() const noexcept { return shifts_.bits(); }
  unsigned exponent() const noexcept { return exponent_; }
  double eps_target() const noexcept { return eps_target_; }
  double eps_internal() const noexcept {
    return std::ldexp(1.0, -static_cast<int>(exponent_));
  }
  std::size_t max_shift() const noexcept { return shifts_.max_index(); }
  const ShiftTable& shifts() const noexcept { return shifts_; }
  std::uint64_t children() const noexcept { return children_; }
  std::uint64_t perms_per_tree() const noexcept { return children_ / 2; }

  std::uint64_t size() const noexcept {
    return shifts_.count() * exponent_ * perms_per_tree();
  }

  Ordering ordering(std::uint64_t index) const {
    if (index >= size()) {
      throw IndexError("ordering index " + std::to_string(index) +
                       " out of range");
    }
    const std::uint64_t perms = perms_per_tree();
    const std::uint64_t tree_major = index / perms;
    return Ordering{static_cast<std::size_t>(tree_major / exponent_),
                    static_cast<unsigned>(tree_major % exponent_),
                    index % perms};
  }

  std::uint64_t index_of(const Ordering& o) const {
    check(o);
    return (o.shift * exponent_ + o.tree) * perms_per_tree() + o.perm;
  }

  /// Random-access view of every ordering; elements are computed on demand.
  View orderings() const noexcept;

  /// Materialized child permutation k (path and inverse).
  ChildPermutation permutation(std::uint64_t k) const {
    if (k >= perms_per_tree()) throw IndexError("permutation index");
    return walecki_path(children_, k);
  }

  std::uint64_t rank(std::uint64_t perm, std::uint64_t child) const noexcept {
    return walecki_rank(children_, perm, child);
  }

  void check(const Ordering& o) const {
    if (o.shift >= shifts_.count() || o.tree >= exponent_ ||
        o.perm >= perms_per_tree()) {
      throw IndexError("ordering outside this family");
    }
  }

  /// Child cells in which shifted points a != b separate under tree `tree`.
  Separation separate(unsigned tree, const std::uint64_t* a,
                      const std::uint64_t* b) const noexcept {
    std::uint64_t diff = 0;
    for (std::size_t i = 0; i < dim_; ++i) diff |= a[i] ^ b[i];
    const int w = static_cast<int>(bits());
    const int top = static_cast<int>(std::bit_width(diff)) - 1;
    const int depth = w - top;
    const int e = static_cast<int>(exponent_);
    const int j = static_cast<int>(tree);
    const int block = depth <= j ? 0 : (depth - j + e - 1) / e;
    const int low = w - j - block * e;
    const std::uint64_t mask = (std::uint64_t{1} << exponent_) - 1;
    Separation s;
    s.block = static_cast<unsigned>(block);
    for (std::size_t i = 0; i < dim_; ++i) {
      const unsigned at = static_cast<unsigned>(i) * exponent_;
      s.child_a |= extract(a[i], low, mask) << at;
      s.child_b |= extract(b[i], low, mask) << at;
    }
    return s;
  }

  /// Order of two unshifted raw coordinate vectors under `o`. Equal only
  /// when every coordinate matches.
  std::strong_ordering compare_raw(const Ordering& o, const std::uint64_t* a,
                                   const std::uint64_t* b) const noexcept {
    const std::uint64_t s = shifts_.values()[o.shift];
    std::uint64_t sa[kMaxDim];
    std::uint64_t sb[kMaxDim];
    bool same = true;
    for (std::size_t i = 0; i < dim_; ++i) {
      sa[i] = a[i] + s;
      sb[i] = b[i] + s;
      same = same && a[i] == b[i];
    }
    if (same) return std::strong_ordering::equal;
    const Separation sep = separate(o.tree, sa, sb);
    return rank(o.perm, sep.child_a) <=> rank(o.perm, sep.child_b);
  }

  std::strong_ordering compare(const Ordering& o, const Point& p,
                               const Point& q) const {
    check_same_arity(p, q);
    if (p.dim() != dim_) throw ArityError("point dimension differs from family");
    std::uint64_t a[kMaxDim];
    std::uint64_t b[kMaxDim];
    for (std::size_t i = 0; i < dim_; ++i) {
      a[i] = p.coords[i].raw;
      b[i] = q.coords[i].raw;
    }
    return compare_raw(o, a, b);
  }

 private:
  OrderingFamily(std::size_t dim, unsigned exponent, unsigned w)
      : dim_(dim), exponent_(exponent), shifts_(dim, w) {
    if (exponent == 0) throw ConfigError("exponent E must be at least 1");
    if (exponent * dim > kMaxChildBits) {
      throw ConfigError("E*d = " + std::to_string(exponent * dim) +
                        " exceeds the cap of " +
                        std::to_string(kMaxChildBits));
    }
    children_ = std::uint64_t{1} << (exponent * dim);
    const double shifts = static_cast<double>(shifts_.count());
    eps_target_ = eps_internal() * 2.0 * shifts *
                  std::sqrt(static_cast<double>(dim));
  }

  static void check_dim(std::size_t dim) {
    if (dim == 0 || dim > kMaxDim) {
      throw ConfigError("dimension " + std::to_string(dim) +
                        " outside [1, " + std::to_string(kMaxDim) + "]");
    }
  }

  static std::uint64_t extract(std::uint64_t x, int low,
                               std::uint64_t mask) noexcept {
    return (low >= 0 ? x >> low : x << -low) & mask;
  }

  std::size_t dim_ = 0;
  unsigned exponent_ = 0;
  double eps_target_ = 0.0;
  std::uint64_t children_ = 0;
  ShiftTable shifts_;
};

class OrderingFamily::View {
 public:
  class iterator {
   public:
    using iterator_category = std::random_access_iterator_tag;
    using value_type = Ordering;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Ordering;

    iterator() = default;
    iterator(const OrderingFamily* f, std::uint64_t i) : f_(f), i_(i) {}

    Ordering operator*() const { return f_->ordering(i_); }
    Ordering operator[](difference_type n) const { return *(*this + n); }
    iterator& operator++() { ++i_; return *this; }
    iterator operator++(int) { auto t = *this; ++i_; return t; }
    iterator& operator--() { --i_; return *this; }
    iterator operator--(int) { auto t = *this; --i_; return t; }
    iterator& operator+=(difference_type n) { i_ += n; return *this; }
    iterator& operator-=(difference_type n) { i_ -= n; return *this; }
    friend iterator operator+(iterator it, difference_type n) { return it += n; }
    friend iterator operator+(difference_type n, iterator it) { return it += n; }
    friend iterator operator-(iterator it, difference_type n) { return it -= n; }
    friend difference_type operator-(const iterator& a, const iterator& b) {
      return static_cast<difference_type>(a.i_) -
             static_cast<difference_type>(b.i_);
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.i_ == b.i_;
    }
    friend auto operator<=>(const iterator& a, const iterator& b) {
      return a.i_ <=> b.i_;
    }

   private:
    const OrderingFamily* f_ = nullptr;
    std::uint64_t i_ = 0;
  };

  explicit View(const OrderingFamily* f) : f_(f) {}
  iterator begin() const { return {f_, 0}; }
  iterator end() const { return {f_, f_->size()}; }
  std::uint64_t size() const { return f_->size(); }
  Ordering operator[](std::uint64_t i) const { return f_->ordering(i); }

 private:
  const OrderingFamily* f_;
};

inline OrderingFamily::View OrderingFamily::orderings() const noexcept {
  return View(this);
}

}  // namespace lso
