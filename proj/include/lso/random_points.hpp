#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "lso/fixed_point.hpp"

namespace lso {

using Rng = std::mt19937_64;

/// Uniform point of [0,1)^d on the 2^-w grid.
inline Point random_point(Rng& rng, std::size_t dim, unsigned w, PointId id = 0) {
  Point p;
  p.id = id;
  p.coords.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) p.coords.push_back(Coord{rng() >> (64 - w)});
  return p;
}

/// n uniform points with ids 0..n-1.
inline std::vector<Point> random_points(Rng& rng, std::size_t n, std::size_t dim,
                                        unsigned w) {
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_point(rng, dim, w, i));
  return out;
}

/// A pair whose separation has a log-uniform scale between 2^-min_scale
/// and 1, so that every quadtree level gets exercised.
inline std::pair<Point, Point> random_pair_multiscale(Rng& rng, std::size_t dim,
                                                      unsigned w,
                                                      unsigned min_scale) {
  Point p = random_point(rng, dim, w, 0);
  Point q = p;
  q.id = 1;
  std::uniform_int_distribution<unsigned> scale_dist(0, std::min(min_scale, w));
  const unsigned scale = scale_dist(rng);
  const std::uint64_t limit = std::uint64_t{1} << w;
  const std::uint64_t reach = limit >> scale;
  for (Coord& c : q.coords) {
    const auto step = static_cast<std::int64_t>(rng() % (reach + 1));
    const auto moved = static_cast<std::int64_t>(c.raw) + ((rng() & 1) ? step : -step);
    c.raw = static_cast<std::uint64_t>(
        std::clamp<std::int64_t>(moved, 0, static_cast<std::int64_t>(limit - 1)));
  }
  return {std::move(p), std::move(q)};
}

}  // namespace lso
