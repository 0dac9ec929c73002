#pragma once

// Oracle-backed verification suites. Each suite runs one property check
// end to end and reports pass/fail with a one-line detail. The acceptance
// binary runs them at full size; `lso verify` runs reduced versions for a
// user-chosen dimension and eps.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "lso/errors.hpp"
#include "lso/fixed_point.hpp"
#include "lso/oracle.hpp"
#include "lso/ordering_family.hpp"
#include "lso/proximity.hpp"
#include "lso/random_points.hpp"
#include "lso/spanner.hpp"
#include "lso/walecki.hpp"

namespace lso::verify {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

/// Runs `body(result)`; an escaping exception fails the suite.
template <class Body>
SuiteResult timed(std::string name, Body&& body) {
  SuiteResult r;
  r.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline long double ratio(SquaredDistance got, SquaredDistance exact) {
  if (exact == 0) return got == 0 ? 1.0L : HUGE_VALL;
  return std::sqrt(static_cast<long double>(got) / static_cast<long double>(exact));
}

template <class... Args>
std::string str(const Args&... args) {
  std::ostringstream out;
  out.precision(6);
  (out << ... << args);
  return out.str();
}

inline void erase_at(std::vector<Point>& v, std::size_t at) {
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(at));
}

}  // namespace detail

inline SuiteResult walecki_cover(const std::vector<std::uint64_t>& sizes = {2, 4, 8, 16, 64}) {
  return detail::timed("walecki decomposition", [&](SuiteResult& r) {
    for (std::uint64_t n : sizes) {
      const auto perms = walecki_paths(n);
      std::set<std::pair<std::uint64_t, std::uint64_t>> edges;
      std::size_t total = 0;
      bool hamiltonian = perms.size() == n / 2;
      for (const auto& p : perms) {
        hamiltonian = hamiltonian && p.path.size() == n &&
                      std::set<std::uint64_t>(p.path.begin(), p.path.end()).size() == n;
        for (std::size_t i = 0; i + 1 < p.path.size(); ++i) {
          edges.emplace(std::min(p.path[i], p.path[i + 1]), std::max(p.path[i], p.path[i + 1]));
          ++total;
        }
      }
      const std::size_t all = n * (n - 1) / 2;
      if (!hamiltonian || total != all || edges.size() != all) {
        r.passed = false;
        r.detail = detail::str("n=", n, ": ", perms.size(), " paths, ", edges.size(),
                               " distinct of ", total, " edges, expected ", all);
        return;
      }
    }
    r.detail = detail::str("n in {2,4,8,16,64}: n/2 edge-disjoint Hamiltonian paths cover K_n");
  });
}

inline SuiteResult residue_lemma(long long max_n = 31, unsigned max_l = 12) {
  return detail::timed("shift residues", [&](SuiteResult& r) {
    int checked = 0;
    for (long long n = 3; n <= max_n; n += 2) {
      for (unsigned l = 0; l <= max_l; ++l) {
        ++checked;
        if (!oracle::shift_residues_check(n, l)) {
          r.passed = false;
          r.detail = detail::str("fails for n=", n, " l=", l);
          return;
        }
      }
    }
    r.detail = detail::str(checked, " (n, l) combinations hold exactly");
  });
}

/// Some shift puts each pair in a common cell of side <= 2(D+1)|pq|.
inline SuiteResult shifting_lemma(std::uint64_t seed, const std::vector<std::size_t>& dims = {1, 2, 3},
                                  int pairs = 10000, unsigned w = 32, unsigned min_scale = 26) {
  return detail::timed("shifting lemma", [&](SuiteResult& r) {
    Rng rng(seed);
    long double worst = 0;
    for (std::size_t d : dims) {
      const ShiftTable table(d, w);
      const SquaredDistance floor_sq = SquaredDistance{1} << (2 * (w - min_scale));
      const SquaredDistance k = 2 * table.count();
      for (int done = 0; done < pairs;) {
        const auto [p, q] = random_pair_multiscale(rng, d, w, min_scale);
        const SquaredDistance sq = sq_dist(p, q);
        if (sq < floor_sq) continue;
        ++done;
        unsigned best_depth = 0;
        for (std::size_t i = 0; i < table.count(); ++i) {
          best_depth = std::max(best_depth, common_cell_depth(shift_point(p, i, table),
                                                              shift_point(q, i, table), w));
        }
        const SquaredDistance side = SquaredDistance{1} << (w + 1 - best_depth);
        worst = std::max(worst, std::sqrt(static_cast<long double>(side) * side /
                                          static_cast<long double>(sq)) /
                                    static_cast<long double>(k));
        if (side * side > k * k * sq) {
          r.passed = false;
          r.detail = detail::str("d=", d, ": best common cell side exceeds 2(D+1)|pq|");
          return;
        }
      }
    }
    r.detail = detail::str(pairs, " pairs per dimension; worst side/(2(D+1)|pq|) = ", worst);
  });
}

/// Sorting by the comparator equals the explicit quadtree walk.
inline SuiteResult comparator_matches_dfs(std::uint64_t seed, std::size_t dim = 2,
                                          const std::vector<unsigned>& exponents = {1, 2},
                                          int sets = 20, std::size_t n = 64, unsigned w = 32) {
  return detail::timed("comparator vs quadtree walk", [&](SuiteResult& r) {
    Rng rng(seed);
    std::uint64_t checked = 0;
    for (unsigned e : exponents) {
      const auto family = OrderingFamily::with_exponent(dim, e, w);
      for (int s = 0; s < sets; ++s) {
        const auto pts = random_points(rng, n, dim, w);
        const auto flat = lso::detail::flatten(pts, dim);
        for (const Ordering& o : family.orderings()) {
          const auto idx = lso::detail::sort_by(family, o, flat, pts);
          const auto ref = oracle::reference_dfs_order(pts, family.shifts(), o.shift, e, o.tree,
                                                       family.permutation(o.perm));
          ++checked;
          for (std::size_t i = 0; i < n; ++i) {
            if (pts[idx[i]].id != ref[i]) {
              r.passed = false;
              r.detail = detail::str("E=", e, " set ", s, " ordering (", o.shift, ",", o.tree,
                                     ",", o.perm, ") differs at rank ", i);
              return;
            }
          }
        }
      }
    }
    r.detail = detail::str(checked, " (ordering, point set) sorts identical");
  });
}

/// Every sufficiently separated pair is eps-protected in some ordering.
inline SuiteResult lso_property(std::uint64_t seed, const std::vector<std::size_t>& dims = {1, 2},
                                const std::vector<double>& eps_list = {0.25, 0.5}, int sets = 10,
                                std::size_t n = 128, unsigned w = 32, unsigned min_scale = 26) {
  return detail::timed("LSO property", [&](SuiteResult& r) {
    Rng rng(seed);
    const SquaredDistance floor_sq = SquaredDistance{1} << (2 * (w - min_scale));
    std::uint64_t pairs = 0;
    for (std::size_t d : dims) {
      for (double eps : eps_list) {
        const auto family = OrderingFamily::build(d, eps, w);
        for (int s = 0; s < sets; ++s) {
          const auto pts = random_points(rng, n, d, w);
          const oracle::LsoPairChecker checker(family, pts);
          for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
              if (sq_dist(pts[p], pts[q]) < floor_sq) continue;
              ++pairs;
              if (!checker.holds(p, q, eps)) {
                r.passed = false;
                r.detail = detail::str("d=", d, " eps=", eps, " set ", s, ": pair (", p, ",", q,
                                       ") unprotected in all ", family.size(), " orderings");
                return;
              }
            }
          }
        }
      }
    }
    r.detail = detail::str(pairs, " pairs protected");
  });
}

/// Random red/blue insert/delete trace; reported pair checked after every step.
inline SuiteResult dynamic_bcp(std::uint64_t seed, std::size_t dim = 2, double eps = 0.25,
                               int traces = 2, int steps = 512, std::size_t max_n = 256,
                               unsigned w = 32) {
  return detail::timed("dynamic bichromatic closest pair", [&](SuiteResult& r) {
    Rng rng(seed);
    long double worst = 1.0L;
    const auto family = OrderingFamily::build(dim, eps, w);
    for (int t = 0; t < traces; ++t) {
      BichromaticClosestPair bcp(family);
      std::vector<Point> red;
      std::vector<Point> blue;
      PointId next = 0;
      for (int step = 0; step < steps; ++step) {
        const std::size_t live = red.size() + blue.size();
        if (live < 2 || (live < max_n && rng() % 3 != 0)) {
          const Color c = rng() % 2 ? Color::red : Color::blue;
          const Point p = random_point(rng, dim, w, next++);
          bcp.insert(p, c);
          (c == Color::red ? red : blue).push_back(p);
        } else {
          const std::size_t at = rng() % live;
          if (at < red.size()) {
            bcp.erase(red[at].id);
            detail::erase_at(red, at);
          } else {
            bcp.erase(blue[at - red.size()].id);
            detail::erase_at(blue, at - red.size());
          }
        }
        const auto exact = oracle::exact_bcp(red, blue);
        const auto got = bcp.current();
        if (exact.has_value() != got.has_value()) {
          r.passed = false;
          r.detail = detail::str("trace ", t, " step ", step, ": pair presence mismatch");
          return;
        }
        if (!exact) continue;
        const long double q = detail::ratio(got->sq, exact->sq);
        worst = std::max(worst, q);
        if (q > 1.0L + eps) {
          r.passed = false;
          r.detail = detail::str("trace ", t, " step ", step, ": ratio ", static_cast<double>(q));
          return;
        }
      }
    }
    r.detail = detail::str(traces, "x", steps, " steps, |family|=", family.size(),
                           ", worst ratio ", static_cast<double>(worst), " <= ", 1 + eps);
  });
}

struct SpannerOutcome {
  SuiteResult spanner;
  SuiteResult locality;
};

/// Dynamic spanner under churn: dilation, edge and degree bounds, rebuild
/// equivalence; every observed delta is checked for locality on the side.
inline SpannerOutcome dynamic_spanner(std::uint64_t seed, std::size_t dim = 2,
                                      const std::vector<double>& eps_list = {0.25, 0.5},
                                      const std::vector<std::size_t>& sizes = {64, 256},
                                      int churn = 256, unsigned w = 32) {
  SpannerOutcome out;
  std::uint64_t deltas = 0;
  std::size_t worst_delta = 0;
  std::size_t delta_bound = 0;
  std::string delta_failure;
  out.spanner = detail::timed("dynamic spanner", [&](SuiteResult& r) {
    Rng rng(seed);
    long double worst = 1.0L;
    for (double eps : eps_list) {
      const auto family = OrderingFamily::build(dim, eps, w);
      const std::size_t bound = 3 * family.size();
      delta_bound = std::max(delta_bound, bound);
      for (std::size_t n : sizes) {
        DynamicSpanner g(family);
        std::vector<Point> live;
        PointId next = 0;
        auto check_update = [&](const EdgeDelta& d) {
          ++deltas;
          worst_delta = std::max(worst_delta, d.size());
          if (d.size() > bound && delta_failure.empty()) {
            delta_failure = detail::str("eps=", eps, " n=", n, ": delta of ", d.size(), " > ", bound);
          }
          if (g.max_degree() > 2 * family.size()) {
            throw ConsistencyError(detail::str("max degree ", g.max_degree(), " > 2|family|"));
          }
          if (live.size() >= 1 && g.edge_count() > family.size() * (live.size() - 1)) {
            throw ConsistencyError(detail::str("edge count ", g.edge_count(), " > |family|(n-1)"));
          }
        };
        for (std::size_t i = 0; i < n; ++i) {
          live.push_back(random_point(rng, dim, w, next++));
          check_update(g.insert(live.back()));
        }
        for (int u = 0; u < churn; ++u) {
          if (u % 2 == 0) {
            const std::size_t at = rng() % live.size();
            const PointId id = live[at].id;
            detail::erase_at(live, at);
            check_update(g.erase(id));
          } else {
            live.push_back(random_point(rng, dim, w, next++));
            check_update(g.insert(live.back()));
          }
        }
        const auto edges = g.edges();
        const long double dil = oracle::dilation(live, edges, w);
        worst = std::max(worst, dil);
        if (dil > 1.0L + eps) {
          r.passed = false;
          r.detail = detail::str("eps=", eps, " n=", n, ": dilation ", static_cast<double>(dil));
          return;
        }
        if (g.witnessed_edges() != build_static_spanner(family, live, 0)) {
          r.passed = false;
          r.detail = detail::str("eps=", eps, " n=", n, ": incremental graph differs from rebuild");
          return;
        }
      }
    }
    r.detail = detail::str("worst dilation ", static_cast<double>(worst),
                           "; degree, edge-count and rebuild checks hold");
  });
  out.locality.name = "update locality";
  out.locality.seconds = 0.0;
  if (!delta_failure.empty()) {
    out.locality.passed = false;
    out.locality.detail = delta_failure;
  } else if (deltas == 0) {
    out.locality.passed = false;
    out.locality.detail = "no deltas observed: " + out.spanner.detail;
  } else {
    out.locality.detail = detail::str(deltas, " deltas, largest ", worst_delta,
                                      " edge changes (bound 3|family| = ", delta_bound, ")");
  }
  return out;
}

/// Fault-tolerant spanner: punctured dilation over random fault sets.
inline SuiteResult ft_spanner(std::uint64_t seed, std::size_t dim = 2, double eps = 0.5,
                              const std::vector<std::size_t>& ks = {1, 2, 3}, std::size_t n = 128,
                              int fault_sets = 50, unsigned w = 32) {
  return detail::timed("fault-tolerant spanner", [&](SuiteResult& r) {
    Rng rng(seed);
    long double worst = 1.0L;
    const auto family = OrderingFamily::build(dim, eps, w);
    for (std::size_t k : ks) {
      DynamicSpanner g(family, k);
      const auto pts = random_points(rng, n, dim, w);
      for (const Point& p : pts) g.insert(p);
      if (g.max_degree() > 2 * (k + 1) * family.size()) {
        r.passed = false;
        r.detail = detail::str("k=", k, ": max degree ", g.max_degree());
        return;
      }
      const auto edges = g.edges();
      for (int f = 0; f < fault_sets; ++f) {
        std::set<PointId> faults;
        while (faults.size() < k) faults.insert(rng() % n);
        std::vector<Point> rest;
        for (const Point& p : pts) {
          if (!faults.contains(p.id)) rest.push_back(p);
        }
        const long double dil = oracle::dilation(rest, edges, w);
        worst = std::max(worst, dil);
        if (dil > 1.0L + eps) {
          r.passed = false;
          r.detail = detail::str("k=", k, " fault set ", f, ": dilation ", static_cast<double>(dil));
          return;
        }
      }
    }
    r.detail = detail::str("worst punctured dilation ", static_cast<double>(worst), " <= ", 1 + eps);
  });
}

/// Nearest-neighbor queries interleaved with deletions.
inline SuiteResult dynamic_ann(std::uint64_t seed, const std::vector<std::size_t>& dims = {1, 2},
                               double eps = 0.25, std::size_t n = 128, int queries = 128,
                               unsigned w = 32) {
  return detail::timed("dynamic approximate nearest neighbor", [&](SuiteResult& r) {
    Rng rng(seed);
    long double worst = 1.0L;
    for (std::size_t d : dims) {
      ApproxNearestNeighbor ann(OrderingFamily::build(d, eps, w));
      auto live = random_points(rng, n, d, w);
      for (const Point& p : live) ann.insert(p);
      for (int t = 0; t < queries; ++t) {
        if (t % 4 == 3 && live.size() > 1) {
          const std::size_t at = rng() % live.size();
          ann.erase(live[at].id);
          detail::erase_at(live, at);
        }
        const Point q = random_point(rng, d, w);
        const auto got = ann.query(q);
        const auto exact = oracle::exact_nn(live, q);
        const long double ratio = detail::ratio(got->sq, exact->sq);
        worst = std::max(worst, ratio);
        if (ratio > 1.0L + eps || got->inspected > 2 * ann.family().size()) {
          r.passed = false;
          r.detail = detail::str("d=", d, " query ", t, ": ratio ", static_cast<double>(ratio),
                                 ", inspected ", got->inspected);
          return;
        }
      }
    }
    r.detail = detail::str("worst ratio ", static_cast<double>(worst), " <= ", 1 + eps);
  });
}

inline SuiteResult approx_mst_suite(std::uint64_t seed, std::size_t dim = 2, double eps = 0.25,
                                    int sets = 20, std::size_t n = 64, unsigned w = 32) {
  return detail::timed("approximate MST", [&](SuiteResult& r) {
    Rng rng(seed);
    long double worst = 1.0L;
    for (int s = 0; s < sets; ++s) {
      const auto pts = random_points(rng, n, dim, w);
      const auto mst = approx_mst(pts, eps, w);
      std::vector<PointId> ids;
      for (const Point& p : pts) ids.push_back(p.id);
      const auto spans = minimum_spanning_forest(ids, mst.edges, w).edges.size() == n - 1;
      const long double ratio = mst.weight / oracle::exact_mst_weight(pts, w);
      worst = std::max(worst, ratio);
      if (!spans || mst.edges.size() != n - 1 || ratio > 1.0L + eps) {
        r.passed = false;
        r.detail = detail::str("set ", s, ": ", mst.edges.size(), " edges, ratio ",
                               static_cast<double>(ratio));
        return;
      }
    }
    r.detail = detail::str(sets, " sets span; worst weight ratio ", static_cast<double>(worst));
  });
}

/// |orderings| against (D+1) E 2^(Ed-1) for every constructible (d, E).
/// Small families are enumerated in full; large ones are checked through
/// the indexing bijection at both ends and at random interior points.
inline SuiteResult family_cardinality(std::uint64_t seed) {
  return detail::timed("family cardinality", [&](SuiteResult& r) {
    Rng rng(seed);
    int families = 0;
    for (std::size_t d = 1; d <= kMaxDim; ++d) {
      for (unsigned e = 1; e * d <= kMaxChildBits; ++e) {
        ++families;
        const std::uint64_t shifts = 2 * ((d + 1) / 2) + 1;
        const std::uint64_t expected = shifts * e * (std::uint64_t{1} << (e * d - 1));
        const auto f = OrderingFamily::with_exponent(d, e, 32);
        const auto view = f.orderings();
        const auto counted = static_cast<std::uint64_t>(view.end() - view.begin());
        bool ok = counted == expected && family_size(d, e) == expected;
        if (ok && expected <= 100000) {
          std::set<std::tuple<std::size_t, unsigned, std::uint64_t>> seen;
          for (const Ordering& o : view) {
            f.check(o);
            seen.emplace(o.shift, o.tree, o.perm);
          }
          ok = seen.size() == expected;
        } else if (ok) {
          const Ordering last = view[expected - 1];
          ok = view[0] == Ordering{0, 0, 0} &&
               last == Ordering{shifts - 1, e - 1, (std::uint64_t{1} << (e * d - 1)) - 1};
          for (int t = 0; t < 1000 && ok; ++t) {
            const std::uint64_t i = rng() % expected;
            ok = f.index_of(view[i]) == i;
          }
        }
        if (!ok) {
          r.passed = false;
          r.detail = detail::str("d=", d, " E=", e, ": counted ", counted, ", formula ", expected);
          return;
        }
      }
    }
    r.detail = detail::str(families, " (d, E) families match (D+1) E 2^(Ed-1)");
  });
}

/// The twelve acceptance checks at full size, in criterion order.
inline std::vector<SuiteResult> run_acceptance(std::uint64_t seed,
                                               const std::function<void(const SuiteResult&)>& on_done = {}) {
  std::vector<SuiteResult> out;
  auto push = [&](SuiteResult r) {
    if (on_done) on_done(r);
    out.push_back(std::move(r));
  };
  push(walecki_cover());
  push(residue_lemma());
  push(shifting_lemma(seed + 3));
  push(comparator_matches_dfs(seed + 4));
  push(lso_property(seed + 5));
  push(dynamic_bcp(seed + 6));
  auto sp = dynamic_spanner(seed + 7);
  push(sp.spanner);
  push(ft_spanner(seed + 8));
  push(dynamic_ann(seed + 9));
  push(approx_mst_suite(seed + 10));
  push(family_cardinality(seed + 11));
  push(sp.locality);
  return out;
}

/// Reduced suites for one (dim, eps) pair.
inline std::vector<SuiteResult> run_quick(std::size_t dim, double eps, std::uint64_t seed,
                                          unsigned w = 32,
                                          const std::function<void(const SuiteResult&)>& on_done = {}) {
  std::vector<SuiteResult> out;
  auto push = [&](SuiteResult r) {
    if (on_done) on_done(r);
    out.push_back(std::move(r));
  };
  const unsigned scale = std::min(26u, w > 6 ? w - 6 : 1u);
  push(walecki_cover());
  push(shifting_lemma(seed, {dim}, 2000, w, scale));
  const unsigned small_e = dim <= 3 ? 1 : 0;
  if (small_e) push(comparator_matches_dfs(seed + 1, dim, {1}, 3, 32, w));
  push(lso_property(seed + 2, {dim}, {eps}, 1, 48, w, scale));
  push(dynamic_bcp(seed + 3, dim, eps, 1, 128, 64, w));
  auto sp = dynamic_spanner(seed + 4, dim, {eps}, {48}, 48, w);
  push(sp.spanner);
  push(sp.locality);
  push(ft_spanner(seed + 5, dim, eps, {1}, 48, 10, w));
  push(dynamic_ann(seed + 6, {dim}, eps, 64, 64, w));
  push(approx_mst_suite(seed + 7, dim, eps, 3, 48, w));
  return out;
}

/// Checks on a caller-supplied point set: LSO property over all distinct
/// pairs, static spanner dilation, monochromatic closest pair, MST weight.
inline std::vector<SuiteResult> run_on_points(std::span<const Point> points, double eps,
                                              unsigned w, std::size_t fault_tolerance = 0,
                                              const std::function<void(const SuiteResult&)>& on_done = {}) {
  if (points.size() < 2) throw DomainError("verify needs at least two points");
  if (points.size() > 512) throw DomainError("verify on a point file supports at most 512 points");
  std::vector<SuiteResult> out;
  auto push = [&](SuiteResult r) {
    if (on_done) on_done(r);
    out.push_back(std::move(r));
  };
  const auto family = OrderingFamily::build(points.front().dim(), eps, w);
  const std::size_t n = points.size();

  push(detail::timed("LSO property", [&](SuiteResult& r) {
    const oracle::LsoPairChecker checker(family, points);
    std::uint64_t pairs = 0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (sq_dist(points[p], points[q]) == 0) continue;
        ++pairs;
        if (!checker.holds(p, q, eps)) {
          r.passed = false;
          r.detail = detail::str("pair (", points[p].id, ",", points[q].id, ") unprotected");
          return;
        }
      }
    }
    r.detail = detail::str(pairs, " pairs protected");
  }));

  push(detail::timed("spanner dilation", [&](SuiteResult& r) {
    std::vector<Edge> edges;
    for (const auto& e : build_static_spanner(family, points, fault_tolerance)) edges.push_back(e.edge);
    const long double dil = oracle::dilation(points, edges, w);
    r.passed = dil <= 1.0L + eps;
    r.detail = detail::str(edges.size(), " edges, dilation ", static_cast<double>(dil));
  }));

  push(detail::timed("closest pair", [&](SuiteResult& r) {
    ClosestPair cp(family);
    for (const Point& p : points) cp.insert(p);
    const auto got = cp.current();
    const auto exact = oracle::exact_closest_pair(points);
    const long double q = detail::ratio(got->sq, exact->sq);
    r.passed = q <= 1.0L + eps;
    r.detail = detail::str("ratio ", static_cast<double>(q));
  }));

  push(detail::timed("approximate MST", [&](SuiteResult& r) {
    const auto mst = approx_mst(points, eps, w);
    const long double exact = oracle::exact_mst_weight(points, w);
    const long double q = exact > 0 ? mst.weight / exact : 1.0L;
    r.passed = mst.edges.size() == n - 1 && q <= 1.0L + eps;
    r.detail = detail::str(mst.edges.size(), " edges, weight ratio ", static_cast<double>(q));
  }));
  return out;
}

}  // namespace lso::verify
