#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>

#include "oddflag/bruhat.hpp"
#include "oddflag/notation.hpp"

namespace oddflag {

enum class GraphKind { Even, Odd };

// Thrown when |W^P| exceeds the configured build cap.
struct SizeCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BuildOptions {
  int workers = 1;
  std::size_t size_cap = 100000;  // maximum admitted |W^P|
};

// Degree-labeled moment graph: a vertex per coset head, a directed edge
// u -> head(min_rep(u) s_alpha) for each alpha in R^+ \ R_P^+ whose endpoint
// is admitted by the kind.  Every directed edge has a reverse edge carrying
// the same degree vector.  Vertices are sorted lexicographically and edges
// by (src, dst, root), so identical inputs give identical graphs.
struct MomentGraph {
  FlagContext ctx{1, 1};
  GraphKind kind = GraphKind::Even;
  std::vector<CosetRep> vertices;

  struct Edge {
    int src = -1;
    int dst = -1;
    Root root;
    DegreeVector degree;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  std::vector<Edge> edges;
  std::vector<std::size_t> adj;  // CSR offsets into edges, size |vertices|+1

  int vertex_index(const CosetRep& rep) const;
  std::span<const Edge> out_edges(int v) const;

  friend bool operator==(const MomentGraph&, const MomentGraph&) = default;
};

MomentGraph build_moment_graph(const FlagContext& ctx, GraphKind kind,
                               const BuildOptions& opts = {});

// An unoriented walk recorded through directed edges: step k departs from the
// endpoint of step k-1, starting at vertex `start`.
struct Chain {
  int start = -1;
  std::vector<MomentGraph::Edge> steps;
};

// Componentwise sum of the step degrees; rejects non-consecutive chains.
DegreeVector chain_degree_direct(const MomentGraph& g, const Chain& c);

// Chain degree from the step roots alone: position i receives one per root
// whose degree class has a 1 there and two per root with a 2 there.
DegreeVector chain_degree_od(const std::vector<Root>& roots, const FlagContext& ctx);

std::string export_dot(const MomentGraph& g, Notation notation = Notation::Bar);
std::string export_json(const MomentGraph& g, Notation notation = Notation::Bar);

// Inverse of export_json; the result compares equal to the exported graph.
MomentGraph parse_graph_json(const std::string& text);

}  // namespace oddflag
