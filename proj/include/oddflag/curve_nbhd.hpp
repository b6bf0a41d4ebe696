#pragma once

#include "oddflag/moment_graph.hpp"

namespace oddflag {

// All vertices reachable from some source by a walk of total degree <= d.
// Label-correcting search keeping a Pareto-minimal antichain of used budgets
// per vertex; a state is expanded only while undominated.  The result is
// sorted lexicographically and independent of the expansion order.
std::vector<CosetRep> reachable(const MomentGraph& g,
                                const std::vector<CosetRep>& sources,
                                const DegreeVector& d);

struct NeighborhoodResult {
  CosetRep lambda;
  DegreeVector degree;

  struct Component {
    CosetRep rep;
    int dim = 0;
    friend bool operator==(const Component&, const Component&) = default;
  };
  std::vector<Component> components;  // Bruhat antichain, sorted by rep
};

// Curve neighborhood Gamma_d(X(lambda)): Bruhat-maximal vertices reachable
// from the down-set of lambda by chains of degree <= d, with dimensions.
NeighborhoodResult gamma(const MomentGraph& g, const CosetRep& lambda,
                         const DegreeVector& d);

// The m heads (bar(m+1)|2|3|..|m) and (bar(j)|2|..|j-1|1|j+1|..|m), j = 2..m.
std::vector<CosetRep> expected_components(const FlagContext& ctx);

// Expected-dimension bookkeeping for degree (1^m):
//   codim Div + codim pt = deg q_1..q_m + codim of the component,
// which holds iff component_dim = 2n.
bool expected_dim_check(const FlagContext& ctx, int component_dim);

std::string neighborhood_json(const NeighborhoodResult& r, const FlagContext& ctx,
                              Notation notation = Notation::Bar);

// Structural description of the q_1..q_m part of tau_Div_i * tau_id: the m
// Schubert terms with symbolic coefficients (the evaluation-map degrees a_j
// are not computed), expected-dimension verdicts, and the verification that
// the computed curve neighborhood matches the listed components.
struct QuantumReport {
  FlagContext ctx{1, 1};
  DegreeVector degree;
  std::vector<int> q_degrees;

  struct Term {
    CosetRep rep;
    int dim = 0;
    bool expected_dim = false;
    std::string coefficient;  // symbolic, e.g. "(tau_Div_i,d) * a_2"
  };
  std::vector<Term> terms;

  std::vector<CosetRep> computed;  // gamma(id, (1^m)) component heads
  bool verified = false;
};

QuantumReport quantum_report(const FlagContext& ctx, const BuildOptions& opts = {});
std::string render_text(const QuantumReport& r, Notation notation = Notation::Bar);

}  // namespace oddflag
