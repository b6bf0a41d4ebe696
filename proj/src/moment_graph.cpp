#include "oddflag/moment_graph.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "oddflag/parallel.hpp"

namespace oddflag {

namespace {

const char* kind_name(GraphKind kind) {
  return kind == GraphKind::Even ? "even" : "odd";
}

void rebuild_offsets(MomentGraph& g) {
  g.adj.assign(g.vertices.size() + 1, 0);
  for (const auto& e : g.edges) g.adj[static_cast<std::size_t>(e.src) + 1]++;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) g.adj[v + 1] += g.adj[v];
}

}  // namespace

int MomentGraph::vertex_index(const CosetRep& rep) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), rep);
  if (it == vertices.end() || !(*it == rep)) return -1;
  return static_cast<int>(it - vertices.begin());
}

std::span<const MomentGraph::Edge> MomentGraph::out_edges(int v) const {
  if (v < 0 || v >= static_cast<int>(vertices.size()))
    throw std::out_of_range("vertex index out of range");
  return {edges.data() + adj[v], adj[v + 1] - adj[v]};
}

MomentGraph build_moment_graph(const FlagContext& ctx, GraphKind kind,
                               const BuildOptions& opts) {
  if (wp_size_saturated(ctx, opts.size_cap) > opts.size_cap)
    throw SizeCapExceeded("|W^P| exceeds the size cap of " +
                          std::to_string(opts.size_cap) +
                          " at n=" + std::to_string(ctx.n) +
                          ", m=" + std::to_string(ctx.m));
  MomentGraph g{ctx, kind, {}, {}, {}};
  g.vertices = kind == GraphKind::Even ? enumerate_wp(ctx) : enumerate_wodd(ctx);

  const std::vector<Root> roots = parabolic_complement(ctx);
  std::vector<DegreeVector> degrees;
  degrees.reserve(roots.size());
  for (const Root& r : roots) degrees.push_back(edge_degree(r, ctx));

  std::vector<std::vector<MomentGraph::Edge>> per_src(g.vertices.size());
  parallel_for(g.vertices.size(), opts.workers, [&](std::size_t v) {
    const Window w = min_rep(g.vertices[v], ctx);
    auto& bucket = per_src[v];
    bucket.reserve(roots.size());
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const Window image = reflect(w, roots[k]);
      CosetRep dst = head_of(image, ctx.m);
      if (kind == GraphKind::Odd && !in_wodd(dst, ctx)) continue;
      const int di = g.vertex_index(dst);
      bucket.push_back({static_cast<int>(v), di, roots[k], degrees[k]});
    }
    std::sort(bucket.begin(), bucket.end());
  });

  std::size_t total = 0;
  for (const auto& bucket : per_src) total += bucket.size();
  g.edges.reserve(total);
  for (auto& bucket : per_src)
    g.edges.insert(g.edges.end(), bucket.begin(), bucket.end());
  rebuild_offsets(g);
  return g;
}

DegreeVector chain_degree_direct(const MomentGraph& g, const Chain& c) {
  if (c.start < 0 || c.start >= static_cast<int>(g.vertices.size()))
    throw std::invalid_argument("chain start is not a vertex of the graph");
  DegreeVector total = DegreeVector::zeros(g.ctx.m);
  int at = c.start;
  for (const auto& step : c.steps) {
    if (step.src != at)
      throw std::invalid_argument("chain steps are not consecutive");
    total = total.plus(step.degree);
    at = step.dst;
  }
  return total;
}

DegreeVector chain_degree_od(const std::vector<Root>& roots, const FlagContext& ctx) {
  std::vector<int> ones(ctx.m, 0);
  std::vector<int> twos(ctx.m, 0);
  for (const Root& r : roots) {
    const DegreeVector pattern = classify(r, ctx);  // rejects parabolic roots
    for (int k = 0; k < ctx.m; ++k) {
      if (pattern[k] == 1) ones[k] += 1;
      else if (pattern[k] == 2) twos[k] += 2;
    }
  }
  std::vector<int> d(ctx.m, 0);
  for (int k = 0; k < ctx.m; ++k) d[k] = ones[k] + twos[k];
  return DegreeVector(std::move(d));
}

std::string export_dot(const MomentGraph& g, Notation notation) {
  std::ostringstream os;
  os << "graph moment {\n";
  os << "  graph [n=" << g.ctx.n << ", m=" << g.ctx.m << ", kind=" << kind_name(g.kind)
     << "];\n";
  for (const CosetRep& v : g.vertices)
    os << "  \"" << render_rep(v, g.ctx, notation) << "\";\n";
  for (const auto& e : g.edges) {
    if (e.src >= e.dst) continue;
    os << "  \"" << render_rep(g.vertices[e.src], g.ctx, notation) << "\" -- \""
       << render_rep(g.vertices[e.dst], g.ctx, notation) << "\" [label=\""
       << to_string(e.root) << "\", degree=\"" << render_degree(e.degree) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_json(const MomentGraph& g, Notation notation) {
  nlohmann::json j;
  j["n"] = g.ctx.n;
  j["m"] = g.ctx.m;
  j["kind"] = kind_name(g.kind);
  auto vertices = nlohmann::json::array();
  for (const CosetRep& v : g.vertices) vertices.push_back(render_rep(v, g.ctx, notation));
  j["vertices"] = std::move(vertices);
  auto edges = nlohmann::json::array();
  for (const auto& e : g.edges) {
    nlohmann::json root;
    switch (e.root.kind) {
      case RootKind::Diff: root["kind"] = "diff"; break;
      case RootKind::Sum: root["kind"] = "sum"; break;
      case RootKind::Long: root["kind"] = "long"; break;
    }
    root["i"] = e.root.i;
    if (e.root.kind == RootKind::Long) root["j"] = nullptr;
    else root["j"] = e.root.j;
    edges.push_back({{"src", render_rep(g.vertices[e.src], g.ctx, notation)},
                     {"dst", render_rep(g.vertices[e.dst], g.ctx, notation)},
                     {"root", std::move(root)},
                     {"degree", e.degree.d}});
  }
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

MomentGraph parse_graph_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const FlagContext ctx(j.at("n").get<int>(), j.at("m").get<int>());
  const std::string kind_str = j.at("kind").get<std::string>();
  GraphKind kind;
  if (kind_str == "even") kind = GraphKind::Even;
  else if (kind_str == "odd") kind = GraphKind::Odd;
  else throw std::invalid_argument("unknown graph kind: '" + kind_str + "'");

  MomentGraph g{ctx, kind, {}, {}, {}};
  for (const auto& vj : j.at("vertices")) {
    const CosetRep rep = parse_rep(vj.get<std::string>(), ctx);
    if (kind == GraphKind::Odd && !in_wodd(rep, ctx))
      throw std::invalid_argument("odd graph vertex outside W^odd");
    g.vertices.push_back(rep);
  }
  std::sort(g.vertices.begin(), g.vertices.end());
  if (std::adjacent_find(g.vertices.begin(), g.vertices.end()) != g.vertices.end())
    throw std::invalid_argument("duplicate graph vertex");

  for (const auto& ej : j.at("edges")) {
    MomentGraph::Edge e;
    e.src = g.vertex_index(parse_rep(ej.at("src").get<std::string>(), ctx));
    e.dst = g.vertex_index(parse_rep(ej.at("dst").get<std::string>(), ctx));
    if (e.src < 0 || e.dst < 0)
      throw std::invalid_argument("edge endpoint is not a listed vertex");
    const auto& rj = ej.at("root");
    const std::string rkind = rj.at("kind").get<std::string>();
    const int i = rj.at("i").get<int>();
    if (rkind == "long") e.root = long_root(i);
    else if (rkind == "diff") e.root = diff_root(i, rj.at("j").get<int>());
    else if (rkind == "sum") e.root = sum_root(i, rj.at("j").get<int>());
    else throw std::invalid_argument("unknown root kind: '" + rkind + "'");
    e.degree = DegreeVector(ej.at("degree").get<std::vector<int>>());
    if (e.degree.size() != ctx.m)
      throw std::invalid_argument("edge degree has wrong length");
    g.edges.push_back(std::move(e));
  }
  std::sort(g.edges.begin(), g.edges.end());
  rebuild_offsets(g);
  return g;
}

}  // namespace oddflag
