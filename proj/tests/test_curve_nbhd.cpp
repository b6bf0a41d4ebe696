#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "oddflag/curve_nbhd.hpp"
#include "oracles.hpp"

using namespace oddflag;

namespace {

CosetRep rep_of(std::vector<int> head) { return CosetRep{std::move(head)}; }
DegreeVector deg(std::vector<int> v) { return DegreeVector(std::move(v)); }

std::vector<CosetRep> component_reps(const NeighborhoodResult& r) {
  std::vector<CosetRep> out;
  for (const auto& c : r.components) out.push_back(c.rep);
  return out;
}

}  // namespace

TEST_CASE("zero budget reaches exactly the sources") {
  const FlagContext ctx(2, 2);
  const MomentGraph g = build_moment_graph(ctx, GraphKind::Odd);
  const std::vector<CosetRep> sources = {identity_rep(ctx), rep_of({2, 1})};
  CHECK(reachable(g, sources, DegreeVector::zeros(2)) == sources);
}

TEST_CASE("budget (1,0) only crosses the first simple edge") {
  const FlagContext ctx(2, 2);
  const MomentGraph g = build_moment_graph(ctx, GraphKind::Odd);
  const std::vector<CosetRep> got = reachable(g, {identity_rep(ctx)}, deg({1, 0}));
  CHECK(got == std::vector<CosetRep>{rep_of({1, 2}), rep_of({2, 1})});
}

TEST_CASE("budget (1,1) reaches the two maximal classes") {
  const FlagContext ctx(2, 2);
  const MomentGraph g = build_moment_graph(ctx, GraphKind::Odd);
  const std::vector<CosetRep> got = reachable(g, {identity_rep(ctx)}, deg({1, 1}));
  CHECK(maximal_elements(got) == std::vector<CosetRep>{rep_of({4, 2}), rep_of({5, 1})});
}

TEST_CASE("invalid reachability queries are rejected") {
  const FlagContext ctx(2, 2);
  const MomentGraph g = build_moment_graph(ctx, GraphKind::Odd);
  CHECK_THROWS_AS(reachable(g, {rep_of({6, 1})}, deg({1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(reachable(g, {identity_rep(ctx)}, deg({1})), std::invalid_argument);
  CHECK_THROWS_AS(reachable(g, {identity_rep(ctx)}, deg({-1, 0})), std::invalid_argument);
}

TEST_CASE("reachability equals brute-force walk enumeration") {
  for (const auto& [n, m] : {std::pair{1, 1}, std::pair{2, 2}}) {
    const FlagContext ctx(n, m);
    for (const GraphKind kind : {GraphKind::Even, GraphKind::Odd}) {
      const MomentGraph g = build_moment_graph(ctx, kind);
      for (const DegreeVector& d : oracles::budgets_below_ones(m)) {
        for (const CosetRep& src : g.vertices) {
          CHECK(reachable(g, {src}, d) == oracles::brute_reachable(g, src, d));
        }
      }
    }
  }
}

TEST_CASE("reachability is monotone in the budget") {
  const FlagContext ctx(3, 2);
  const MomentGraph g = build_moment_graph(ctx, GraphKind::Odd);
  const std::vector<DegreeVector> budgets = {deg({0, 0}), deg({1, 0}), deg({0, 1}),
                                             deg({1, 1}), deg({2, 1}), deg({2, 2})};
  const std::vector<CosetRep> sources = {identity_rep(ctx)};
  for (const DegreeVector& lo : budgets) {
    for (const DegreeVector& hi : budgets) {
      if (!lo.leq(hi)) continue;
      const auto small = reachable(g, sources, lo);
      const auto large = reachable(g, sources, hi);
      CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
    }
  }
}

TEST_CASE("reachability does not depend on the source order") {
  const FlagContext ctx(2, 2);
  const MomentGraph g = build_moment_graph(ctx, GraphKind::Odd);
  std::vector<CosetRep> sources = down_set(rep_of({3, 2}), ctx, true);
  const auto forward = reachable(g, sources, deg({1, 1}));
  std::reverse(sources.begin(), sources.end());
  CHECK(reachable(g, sources, deg({1, 1})) == forward);
}

TEST_CASE("gamma with zero budget returns the variety itself") {
  const FlagContext ctx(2, 2);
  const MomentGraph g = build_moment_graph(ctx, GraphKind::Odd);
  const CosetRep lam = rep_of({4, 2});
  const NeighborhoodResult r = gamma(g, lam, DegreeVector::zeros(2));
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0].rep == lam);
  CHECK(r.components[0].dim == schubert_dim(lam, ctx));
}

TEST_CASE("gamma of the point at (2,2)") {
  const FlagContext ctx(2, 2);
  const MomentGraph g = build_moment_graph(ctx, GraphKind::Odd);
  const NeighborhoodResult r = gamma(g, identity_rep(ctx), deg({1, 1}));
  REQUIRE(r.components.size() == 2);
  CHECK(r.components[0].rep == rep_of({4, 2}));
  CHECK(r.components[0].dim == 4);
  CHECK(r.components[1].rep == rep_of({5, 1}));
  CHECK(r.components[1].dim == 4);
}

TEST_CASE("gamma of the point at (5,3)") {
  const FlagContext ctx(5, 3);
  const MomentGraph g = build_moment_graph(ctx, GraphKind::Odd);
  const NeighborhoodResult r = gamma(g, identity_rep(ctx), deg({1, 1, 1}));
  REQUIRE(r.components.size() == 3);
  std::vector<CosetRep> expected = expected_components(ctx);
  std::sort(expected.begin(), expected.end());
  CHECK(component_reps(r) == expected);
  for (const auto& c : r.components) CHECK(c.dim == 10);
}

TEST_CASE("gamma rejects a lambda outside the graph") {
  const FlagContext ctx(2, 2);
  const MomentGraph g = build_moment_graph(ctx, GraphKind::Odd);
  CHECK_THROWS_AS(gamma(g, rep_of({6, 1}), deg({1, 1})), std::invalid_argument);
}

TEST_CASE("expected component lists") {
  const FlagContext one(3, 1);
  CHECK(expected_components(one) == std::vector<CosetRep>{rep_of({7})});  // bar(2)

  const FlagContext two(2, 2);
  CHECK(expected_components(two) ==
        std::vector<CosetRep>{rep_of({4, 2}), rep_of({5, 1})});

  const FlagContext three(5, 3);
  CHECK(expected_components(three) ==
        std::vector<CosetRep>{rep_of({9, 2, 3}), rep_of({11, 1, 3}), rep_of({10, 2, 1})});
}

TEST_CASE("expected-dimension identity reduces to dim = 2n") {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= n; ++m) {
      const FlagContext ctx(n, m);
      for (int dim = 2 * n - 3; dim <= 2 * n + 3; ++dim)
        CHECK(expected_dim_check(ctx, dim) == (dim == 2 * n));
    }
  }
}

TEST_CASE("neighborhood JSON shape") {
  const FlagContext ctx(2, 2);
  const MomentGraph g = build_moment_graph(ctx, GraphKind::Odd);
  const NeighborhoodResult r = gamma(g, identity_rep(ctx), deg({1, 1}));
  const std::string json = neighborhood_json(r, ctx);
  CHECK(json.find("\"count\": 2") != std::string::npos);
  CHECK(json.find("\"rep\": \"b3|2\"") != std::string::npos);
  CHECK(json.find("\"rep\": \"b2|1\"") != std::string::npos);
  CHECK(json.find("\"expected_dimension\": true") != std::string::npos);
  CHECK(neighborhood_json(r, ctx, Notation::Raw).find("\"rep\": \"4|2\"") !=
        std::string::npos);
}

TEST_CASE("quantum report for a single step") {
  const QuantumReport r = quantum_report(FlagContext(3, 1));
  CHECK(r.terms.size() == 1);
  CHECK(r.terms[0].rep == rep_of({7}));
  CHECK(r.terms[0].dim == 6);
  CHECK(r.terms[0].expected_dim);
  CHECK(r.verified);
  CHECK(r.q_degrees == std::vector<int>{7});
}

TEST_CASE("quantum report at (5,3) and (2,2)") {
  const QuantumReport big = quantum_report(FlagContext(5, 3));
  CHECK(big.terms.size() == 3);
  for (const auto& t : big.terms) {
    CHECK(t.dim == 10);
    CHECK(t.expected_dim);
  }
  CHECK(big.verified);

  const QuantumReport small = quantum_report(FlagContext(2, 2));
  CHECK(small.terms.size() == 2);
  CHECK(small.terms[0].dim == 4);
  CHECK(small.terms[1].dim == 4);
  CHECK(small.verified);

  const std::string text = render_text(small);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("a_1 tau_(b3|2)") != std::string::npos);
  CHECK(text.find("a_2 tau_(b2|1)") != std::string::npos);
}

TEST_CASE("gamma is stable under worker count") {
  const FlagContext ctx(3, 3);
  BuildOptions serial;
  BuildOptions parallel;
  parallel.workers = 4;
  const MomentGraph a = build_moment_graph(ctx, GraphKind::Odd, serial);
  const MomentGraph b = build_moment_graph(ctx, GraphKind::Odd, parallel);
  const NeighborhoodResult ra = gamma(a, identity_rep(ctx), DegreeVector::ones(3));
  const NeighborhoodResult rb = gamma(b, identity_rep(ctx), DegreeVector::ones(3));
  CHECK(neighborhood_json(ra, ctx) == neighborhood_json(rb, ctx));
}
