#pragma once

// Text formats.
//
// Point file: one point per line, whitespace-separated reals in [0, 1);
// the point on line i (1-based) gets id i - 1.
//
// Trace file: one operation per line.
//   I [R|B] x1 ... xd   insert (color defaults to R); ids count inserts from 0
//   D id                delete
//   Q x1 ... xd         nearest-neighbor query
//   P                   report the current closest pair
// Blank lines and lines starting with '#' are skipped in traces.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "lso/errors.hpp"
#include "lso/fixed_point.hpp"
#include "lso/proximity.hpp"

namespace lso::io {

namespace detail {

inline std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

[[noreturn]] inline void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

inline double parse_real(std::string_view tok, std::size_t line) {
  double x = 0;
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc{} || end != tok.data() + tok.size()) {
    fail(line, "not a number: '" + std::string(tok) + "'");
  }
  return x;
}

inline std::uint64_t parse_uint(std::string_view tok, std::size_t line) {
  std::uint64_t x = 0;
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc{} || end != tok.data() + tok.size()) {
    fail(line, "not an id: '" + std::string(tok) + "'");
  }
  return x;
}

inline Point parse_coords(std::span<const std::string_view> toks, unsigned w,
                          std::size_t dim, PointId id, std::size_t line) {
  if (toks.size() != dim) {
    fail(line, "expected " + std::to_string(dim) + " coordinates, got " +
                   std::to_string(toks.size()));
  }
  std::vector<double> x;
  x.reserve(dim);
  for (auto t : toks) x.push_back(parse_real(t, line));
  try {
    return quantize(x, w, dim, id);
  } catch (const DomainError& e) {
    fail(line, e.what());
  }
}

}  // namespace detail

/// Reads a point file. With `dim` unset the first line fixes the dimension.
inline std::vector<Point> read_points(std::istream& in, unsigned w,
                                      std::optional<std::size_t> dim = std::nullopt) {
  check_bits(w);
  std::vector<Point> out;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    const auto toks = detail::split(line);
    if (toks.empty()) detail::fail(n, "empty line");
    if (!dim) dim = toks.size();
    out.push_back(detail::parse_coords(toks, w, *dim, n - 1, n));
  }
  return out;
}

/// Shortest decimal that reads back as raw / 2^w; exact for w <= 52.
inline std::string format_coord(Coord c, unsigned w) {
  char buf[32];
  const double x = std::ldexp(static_cast<double>(c.raw), -static_cast<int>(w));
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, end);
}

inline void write_points(std::ostream& out, std::span<const Point> points, unsigned w) {
  for (const Point& p : points) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
      if (i) out << ' ';
      out << format_coord(p.coords[i], w);
    }
    out << '\n';
  }
}

/// Euclidean length to 9 significant digits.
inline std::string format_distance(SquaredDistance sq, unsigned w) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9Lg", to_length(sq, w));
  return buf;
}

struct TraceOp {
  enum class Kind { insert, erase, query, report };
  Kind kind = Kind::report;
  Color color = Color::red;
  /// Insert: the id assigned; delete: the id removed.
  PointId id = 0;
  /// Insert and query coordinates.
  Point point;
  std::size_t line = 0;
};

/// Parses and validates a trace: arity, coordinate domain, and that every
/// delete names a live id.
inline std::vector<TraceOp> read_trace(std::istream& in, std::size_t dim, unsigned w) {
  check_bits(w);
  std::vector<TraceOp> out;
  std::unordered_set<PointId> live;
  PointId next = 0;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    auto toks = detail::split(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    TraceOp op;
    op.line = n;
    const std::string_view head = toks[0];
    std::span<const std::string_view> rest(toks.data() + 1, toks.size() - 1);
    if (head == "I") {
      op.kind = TraceOp::Kind::insert;
      if (!rest.empty() && (rest[0] == "R" || rest[0] == "B")) {
        op.color = rest[0] == "R" ? Color::red : Color::blue;
        rest = rest.subspan(1);
      }
      op.id = next++;
      op.point = detail::parse_coords(rest, w, dim, op.id, n);
      live.insert(op.id);
    } else if (head == "D") {
      op.kind = TraceOp::Kind::erase;
      if (rest.size() != 1) detail::fail(n, "D takes one id");
      op.id = detail::parse_uint(rest[0], n);
      if (!live.erase(op.id)) detail::fail(n, "id " + std::to_string(op.id) + " is not live");
    } else if (head == "Q") {
      op.kind = TraceOp::Kind::query;
      op.point = detail::parse_coords(rest, w, dim, kProbeId, n);
    } else if (head == "P") {
      op.kind = TraceOp::Kind::report;
      if (!rest.empty()) detail::fail(n, "P takes no arguments");
    } else {
      detail::fail(n, "unknown operation '" + std::string(head) + "'");
    }
    out.push_back(std::move(op));
  }
  return out;
}

}  // namespace lso::io
