#pragma once

#include "oddflag/weyl.hpp"

namespace oddflag {

// First k head entries in increasing order (1 <= k <= m).
std::vector<int> sorted_prefix(const CosetRep& rep, int k);

// Bruhat order on coset heads: lambda <= delta iff every sorted prefix
// dominates entrywise, i.e. Lambda^k_i <= Delta^k_i for all i <= k <= m.
bool bruhat_leq(const CosetRep& lambda, const CosetRep& delta);

// All mu in W^P (or W^odd) with mu <= lambda, in lexicographic order.
std::vector<CosetRep> down_set(const CosetRep& lambda, const FlagContext& ctx,
                               bool odd_only);

// The antichain of elements of s not strictly below another element of s,
// sorted lexicographically.  Pairwise comparisons; fine at desk scale.
std::vector<CosetRep> maximal_elements(const std::vector<CosetRep>& s);

// Dimension of the Schubert variety X(lambda): the length of min_rep(lambda).
int schubert_dim(const CosetRep& lambda, const FlagContext& ctx);

}  // namespace oddflag
