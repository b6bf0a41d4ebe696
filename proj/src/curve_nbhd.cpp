#include "oddflag/curve_nbhd.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace oddflag {

std::vector<CosetRep> reachable(const MomentGraph& g,
                                const std::vector<CosetRep>& sources,
                                const DegreeVector& d) {
  if (d.size() != g.ctx.m)
    throw std::invalid_argument("query degree has wrong length");
  for (int v : d.d)
    if (v < 0) throw std::invalid_argument("query degree must be non-negative");

  std::vector<std::vector<DegreeVector>> labels(g.vertices.size());
  auto try_insert = [&](int v, const DegreeVector& used) -> bool {
    auto& antichain = labels[v];
    for (const DegreeVector& x : antichain)
      if (x.leq(used)) return false;
    std::erase_if(antichain, [&](const DegreeVector& x) { return used.leq(x); });
    antichain.push_back(used);
    return true;
  };

  std::deque<std::pair<int, DegreeVector>> work;
  const DegreeVector zero = DegreeVector::zeros(g.ctx.m);
  for (const CosetRep& src : sources) {
    const int v = g.vertex_index(src);
    if (v < 0) throw std::invalid_argument("source is not a vertex of the graph");
    if (try_insert(v, zero)) work.emplace_back(v, zero);
  }

  while (!work.empty()) {
    auto [v, used] = work.front();
    work.pop_front();
    // Skip labels that a smaller budget has since superseded.
    if (std::find(labels[v].begin(), labels[v].end(), used) == labels[v].end())
      continue;
    for (const auto& e : g.out_edges(v)) {
      const DegreeVector next = used.plus(e.degree);
      if (!next.leq(d)) continue;
      if (try_insert(e.dst, next)) work.emplace_back(e.dst, next);
    }
  }

  std::vector<CosetRep> out;
  for (std::size_t v = 0; v < labels.size(); ++v)
    if (!labels[v].empty()) out.push_back(g.vertices[v]);
  return out;  // vertices are lex sorted, so scanning by index keeps the order
}

NeighborhoodResult gamma(const MomentGraph& g, const CosetRep& lambda,
                         const DegreeVector& d) {
  if (g.vertex_index(lambda) < 0)
    throw std::invalid_argument("lambda is not a vertex of the graph");
  std::vector<CosetRep> sources;
  for (const CosetRep& v : g.vertices)
    if (bruhat_leq(v, lambda)) sources.push_back(v);
  const std::vector<CosetRep> reach = reachable(g, sources, d);
  NeighborhoodResult result;
  result.lambda = lambda;
  result.degree = d;
  for (const CosetRep& rep : maximal_elements(reach))
    result.components.push_back({rep, schubert_dim(rep, g.ctx)});
  return result;
}

std::vector<CosetRep> expected_components(const FlagContext& ctx) {
  const int m = ctx.m;
  std::vector<CosetRep> out;
  CosetRep first;
  first.head.push_back(ctx.bar(m + 1));
  for (int k = 2; k <= m; ++k) first.head.push_back(k);
  out.push_back(std::move(first));
  for (int j = 2; j <= m; ++j) {
    CosetRep rep;
    rep.head.push_back(ctx.bar(j));
    for (int k = 2; k <= m; ++k) rep.head.push_back(k == j ? 1 : k);
    out.push_back(std::move(rep));
  }
  return out;
}

bool expected_dim_check(const FlagContext& ctx, int component_dim) {
  const std::vector<int> q = ctx.q_degrees();
  const int deg_q_total = std::accumulate(q.begin(), q.end(), 0);
  const int lhs = 1 + ctx.dim_flag();  // codim of a divisor plus codim of the point
  const int rhs = deg_q_total + (ctx.dim_flag() - component_dim);
  return lhs == rhs;
}

std::string neighborhood_json(const NeighborhoodResult& r, const FlagContext& ctx,
                              Notation notation) {
  nlohmann::json j;
  j["lambda"] = render_rep(r.lambda, ctx, notation);
  j["degree"] = r.degree.d;
  auto components = nlohmann::json::array();
  for (const auto& c : r.components)
    components.push_back({{"rep", render_rep(c.rep, ctx, notation)},
                          {"dim", c.dim},
                          {"expected_dimension", expected_dim_check(ctx, c.dim)}});
  j["components"] = std::move(components);
  j["count"] = r.components.size();
  return j.dump(2) + "\n";
}

QuantumReport quantum_report(const FlagContext& ctx, const BuildOptions& opts) {
  QuantumReport report;
  report.ctx = ctx;
  report.degree = DegreeVector::ones(ctx.m);
  report.q_degrees = ctx.q_degrees();

  const std::vector<CosetRep> expected = expected_components(ctx);
  for (std::size_t k = 0; k < expected.size(); ++k) {
    QuantumReport::Term term;
    term.rep = expected[k];
    term.dim = schubert_dim(expected[k], ctx);
    term.expected_dim = expected_dim_check(ctx, term.dim);
    term.coefficient = "(tau_Div_i,d) * a_" + std::to_string(k + 1);
    report.terms.push_back(std::move(term));
  }

  const MomentGraph g = build_moment_graph(ctx, GraphKind::Odd, opts);
  const NeighborhoodResult nb = gamma(g, identity_rep(ctx), report.degree);
  for (const auto& c : nb.components) report.computed.push_back(c.rep);

  std::vector<CosetRep> want = expected;
  std::sort(want.begin(), want.end());
  report.verified = want == report.computed &&
                    std::all_of(report.terms.begin(), report.terms.end(),
                                [](const auto& t) { return t.expected_dim; });
  return report;
}

std::string render_text(const QuantumReport& r, Notation notation) {
  const FlagContext& ctx = r.ctx;
  std::ostringstream os;
  os << "quantum product report: IF(1";
  for (int k = 2; k <= ctx.m; ++k) os << "," << k;
  os << ";" << 2 * ctx.n + 1 << ")\n";
  os << "  n = " << ctx.n << ", m = " << ctx.m << ", dim IF = " << ctx.dim_flag() << "\n";
  os << "  deg q = (";
  for (std::size_t k = 0; k < r.q_degrees.size(); ++k) {
    if (k > 0) os << ",";
    os << r.q_degrees[k];
  }
  os << ")\n";
  os << "  query: curve neighborhood of the point in degree " << render_degree(r.degree)
     << "\n\n";

  os << "  components (" << r.terms.size() << "):\n";
  for (const auto& t : r.terms) {
    os << "    tau_(" << render_rep(t.rep, ctx, notation) << ")  dim " << t.dim
       << "  expected-dimension " << 2 * ctx.n << ": " << (t.expected_dim ? "yes" : "NO")
       << "  coefficient " << t.coefficient << "\n";
  }

  os << "\n  tau_Div_i * tau_id = (tau_Div_i,d) q_1";
  for (int k = 2; k <= ctx.m; ++k) os << " q_" << k;
  os << " [ ";
  for (std::size_t k = 0; k < r.terms.size(); ++k) {
    if (k > 0) os << " + ";
    os << "a_" << k + 1 << " tau_(" << render_rep(r.terms[k].rep, ctx, notation) << ")";
  }
  os << " ] + other terms\n";
  os << "  (a_j is the degree of the second evaluation map over component j;"
        " reported symbolically)\n\n";

  if (r.verified) {
    os << "  verification: computed components match, q_1..q_m appears "
       << r.terms.size() << " time(s): PASS\n";
  } else {
    os << "  verification: FAILED\n";
    os << "  computed components:";
    for (const CosetRep& rep : r.computed)
      os << " (" << render_rep(rep, ctx, notation) << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace oddflag
