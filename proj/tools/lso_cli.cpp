// lso: command-line front end for the ordering family and the structures
// built on it. Exit status: 0 ok, 1 bad input, 2 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lso/errors.hpp"
#include "lso/fixed_point.hpp"
#include "lso/io.hpp"
#include "lso/ordering_family.hpp"
#include "lso/proximity.hpp"
#include "lso/random_points.hpp"
#include "lso/spanner.hpp"
#include "lso/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

void print_plain(std::ostream& out, const json& obj) {
  for (const auto& [key, value] : obj.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

struct Options {
  std::size_t dim = 0;
  double eps = 0.5;
  std::optional<double> eps_internal;
  unsigned w = 32;
  std::size_t k = 1;
  std::uint64_t seed = 1;
  std::string points;
  std::string trace;
  std::string out;
  std::string format = "edges";
  std::size_t count = 256;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw lso::DomainError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::ifstream open_input(const std::string& path, const char* flag) {
  if (path.empty()) throw lso::DomainError(std::string(flag) + " is required");
  std::ifstream in(path);
  if (!in) throw lso::DomainError("cannot read " + path);
  return in;
}

std::size_t require_dim(const Options& o) {
  if (o.dim == 0) throw lso::DomainError("--dim is required");
  return o.dim;
}

lso::OrderingFamily make_family(const Options& o, std::size_t dim) {
  if (!o.eps_internal) return lso::OrderingFamily::build(dim, o.eps, o.w);
  int e = 0;
  const double mantissa = std::frexp(*o.eps_internal, &e);
  if (mantissa != 0.5 || e > 0) {
    throw lso::DomainError("--eps-internal must be 2^-E for an integer E >= 1");
  }
  return lso::OrderingFamily::with_exponent(dim, static_cast<unsigned>(1 - e), o.w);
}

std::vector<lso::Point> load_points(const Options& o) {
  auto in = open_input(o.points, "--points");
  std::optional<std::size_t> dim;
  if (o.dim) dim = o.dim;
  return lso::io::read_points(in, o.w, dim);
}

void write_edges(std::ostream& out, const std::vector<lso::Edge>& edges, unsigned w) {
  for (const auto& e : edges) {
    out << e.u << ' ' << e.v << ' ' << lso::io::format_distance(e.sq, w) << '\n';
  }
}

std::size_t max_degree(const std::vector<lso::Edge>& edges) {
  std::unordered_map<lso::PointId, std::size_t> deg;
  std::size_t best = 0;
  for (const auto& e : edges) {
    best = std::max({best, ++deg[e.u], ++deg[e.v]});
  }
  return best;
}

// With --format edges the edge list goes to --out (or stdout) and the
// stats to stderr; with jsonstats the stats go to stdout as JSON and the
// edge list only to --out.
void emit(const Options& o, const std::vector<lso::Edge>& edges, const json& stats) {
  if (o.format == "edges") {
    Output out(o.out);
    write_edges(out.stream(), edges, o.w);
    print_plain(std::cerr, stats);
  } else {
    if (!o.out.empty()) {
      Output out(o.out);
      write_edges(out.stream(), edges, o.w);
    }
    std::cout << stats.dump(2) << '\n';
  }
}

int family_info(const Options& o) {
  const auto f = make_family(o, require_dim(o));
  json info = {
      {"dim", f.dim()},
      {"eps_target", f.eps_target()},
      {"eps_internal", f.eps_internal()},
      {"E", f.exponent()},
      {"D", f.max_shift()},
      {"shifts", f.shifts().count()},
      {"trees", f.exponent()},
      {"perms_per_tree", f.perms_per_tree()},
      {"orderings", f.size()},
      {"rank_table_bytes", 0},
  };
  if (o.format == "jsonstats") {
    std::cout << info.dump(2) << '\n';
  } else {
    print_plain(std::cout, info);
  }
  return 0;
}

int spanner(const Options& o, std::size_t fault_tolerance) {
  const auto pts = load_points(o);
  if (pts.empty()) throw lso::DomainError("point file is empty");
  const auto family = make_family(o, pts.front().dim());
  std::vector<lso::Edge> edges;
  for (const auto& e : lso::build_static_spanner(family, pts, fault_tolerance)) {
    edges.push_back(e.edge);
  }
  emit(o, edges,
       {{"points", pts.size()},
        {"orderings", family.size()},
        {"fault_tolerance", fault_tolerance},
        {"edges", edges.size()},
        {"max_degree", max_degree(edges)}});
  return 0;
}

int mst(const Options& o) {
  const auto pts = load_points(o);
  auto tree = lso::approx_mst(pts, o.eps, o.w);
  std::sort(tree.edges.begin(), tree.edges.end(), [](const auto& a, const auto& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  char weight[48];
  std::snprintf(weight, sizeof weight, "%.9Lg", tree.weight);
  emit(o, tree.edges,
       {{"points", pts.size()}, {"edges", tree.edges.size()}, {"weight", std::string(weight)}});
  return 0;
}

int replay(const Options& o, bool bichromatic) {
  const std::size_t dim = require_dim(o);
  auto in = open_input(o.trace, "--trace");
  const auto ops = lso::io::read_trace(in, dim, o.w);
  Output output(o.out);
  std::ostream& out = output.stream();
  auto family = make_family(o, dim);
  std::optional<lso::BichromaticClosestPair> bcp;
  std::optional<lso::ApproxNearestNeighbor> ann;
  if (bichromatic) {
    bcp.emplace(std::move(family));
  } else {
    ann.emplace(std::move(family));
  }
  using Kind = lso::io::TraceOp::Kind;
  for (const auto& op : ops) {
    switch (op.kind) {
      case Kind::insert:
        if (bcp) bcp->insert(op.point, op.color);
        else ann->insert(op.point);
        break;
      case Kind::erase:
        if (bcp) bcp->erase(op.id);
        else ann->erase(op.id);
        break;
      case Kind::report: {
        if (!bcp) throw lso::ParseError("line " + std::to_string(op.line) + ": P needs bcp");
        const auto r = bcp->current();
        if (r) out << r->first << ' ' << r->second << ' ' << lso::io::format_distance(r->sq, o.w) << '\n';
        else out << "none\n";
        break;
      }
      case Kind::query: {
        if (!ann) throw lso::ParseError("line " + std::to_string(op.line) + ": Q needs ann");
        const auto r = ann->query(op.point);
        if (r) out << r->id << ' ' << lso::io::format_distance(r->sq, o.w) << '\n';
        else out << "none\n";
        break;
      }
    }
  }
  return 0;
}

int verify(const Options& o) {
  bool ok = true;
  auto print = [&](const lso::verify::SuiteResult& r) {
    ok = ok && r.passed;
    std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  " << r.detail << '\n';
  };
  if (!o.points.empty()) {
    const auto pts = load_points(o);
    lso::verify::run_on_points(pts, o.eps, o.w, 0, print);
  } else {
    lso::verify::run_quick(require_dim(o), o.eps, o.seed, o.w, print);
  }
  return ok ? 0 : 2;
}

template <class Body>
double ops_per_sec(std::size_t ops, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s > 0 ? std::round(static_cast<double>(ops) / s * 10) / 10 : 0.0;
}

int bench(const Options& o) {
  const std::size_t dim = require_dim(o);
  const auto family = make_family(o, dim);
  lso::Rng rng(o.seed);
  const auto pts = lso::random_points(rng, o.count, dim, o.w);
  const auto queries = lso::random_points(rng, o.count, dim, o.w);
  json report = {{"dim", dim}, {"orderings", family.size()}, {"n", o.count}};

  lso::BichromaticClosestPair bcp(family);
  report["bcp_insert"] = ops_per_sec(pts.size(), [&] {
    for (const auto& p : pts) bcp.insert(p, p.id % 2 ? lso::Color::blue : lso::Color::red);
  });
  report["bcp_erase"] = ops_per_sec(pts.size(), [&] {
    for (const auto& p : pts) bcp.erase(p.id);
  });

  lso::ApproxNearestNeighbor ann(family);
  report["ann_insert"] = ops_per_sec(pts.size(), [&] {
    for (const auto& p : pts) ann.insert(p);
  });
  report["ann_query"] = ops_per_sec(queries.size(), [&] {
    for (const auto& q : queries) (void)ann.query(q);
  });

  lso::DynamicSpanner g(family, o.k);
  report["spanner_insert"] = ops_per_sec(pts.size(), [&] {
    for (const auto& p : pts) g.insert(p);
  });
  report["spanner_erase"] = ops_per_sec(pts.size(), [&] {
    for (const auto& p : pts) g.erase(p.id);
  });

  if (o.format == "jsonstats") {
    std::cout << report.dump(2) << '\n';
  } else {
    for (const auto& [key, value] : report.items()) {
      std::cout << key << ": " << value << (key.find('_') != std::string::npos ? " ops/s" : "")
                << '\n';
    }
  }
  return 0;
}

// Without --points: writes --count random points. With --points: parses the
// file and writes it back in canonical form.
int gen_points(const Options& o) {
  std::vector<lso::Point> pts;
  if (!o.points.empty()) {
    pts = load_points(o);
  } else {
    lso::Rng rng(o.seed);
    pts = lso::random_points(rng, o.count, require_dim(o), o.w);
  }
  Output out(o.out);
  lso::io::write_points(out.stream(), pts, o.w);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locality-sensitive orderings: spanners, closest pair, nearest neighbor"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--dim", o.dim, "Dimension d")->check(CLI::Range(1, 8));
    sub->add_option("--eps", o.eps, "Target approximation eps in (0, 1)");
    sub->add_option("--eps-internal", o.eps_internal, "Force the quadtree eps to this power of two");
    sub->add_option("--w", o.w, "Fixed-point bits per coordinate")->check(CLI::Range(1, 62));
    sub->add_option("--k", o.k, "Fault tolerance");
    sub->add_option("--seed", o.seed, "RNG seed");
    sub->add_option("--points", o.points, "Point file");
    sub->add_option("--trace", o.trace, "Trace file");
    sub->add_option("--out", o.out, "Output file (default stdout)");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"edges", "jsonstats"}));
    sub->add_option("--count", o.count, "Number of generated points");
  };
  struct Command {
    const char* name;
    const char* help;
    std::function<int()> run;
  };
  const std::vector<Command> commands = {
      {"family-info", "Describe the ordering family", [&] { return family_info(o); }},
      {"build-spanner", "Static spanner of a point file", [&] { return spanner(o, 0); }},
      {"ft-spanner", "Fault-tolerant spanner of a point file", [&] { return spanner(o, o.k); }},
      {"mst", "Approximate Euclidean MST of a point file", [&] { return mst(o); }},
      {"bcp", "Replay a trace against the bichromatic closest pair", [&] { return replay(o, true); }},
      {"ann", "Replay a trace against approximate nearest neighbor", [&] { return replay(o, false); }},
      {"verify", "Run the oracle-backed checks", [&] { return verify(o); }},
      {"bench", "Throughput of each structure", [&] { return bench(o); }},
      {"gen-points", "Write random points, or canonicalize a point file", [&] { return gen_points(o); }},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    subs.push_back(app.add_subcommand(c.name, c.help));
    add_common(subs.back());
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    for (std::size_t i = 0; i < commands.size(); ++i) {
      if (subs[i]->parsed()) return commands[i].run();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
