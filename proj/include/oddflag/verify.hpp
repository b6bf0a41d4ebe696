#pragma once

#include <optional>

#include "oddflag/curve_nbhd.hpp"

namespace oddflag {

struct CheckReport {
  std::string name;
  int n = 0;
  int m = 0;
  bool passed = false;
  std::vector<CosetRep> witnesses;  // counterexamples, smallest first; empty on pass
  double elapsed_ms = 0.0;
};

// Every head reachable from the identity within degree (1^m) satisfies
// |Lambda^k cap {1..k}| >= k-1 for all k.
CheckReport check_prefix_intersection(const FlagContext& ctx, const BuildOptions& opts = {});

// Every such head containing bar(j), 2 <= j <= m, has 1 among its first j entries.
CheckReport check_forced_one(const FlagContext& ctx, const BuildOptions& opts = {});

// Every such head lies below the component head determined by its entries:
// below (bar(m+1)|2|..|m) when its maximum is <= bar(m+1), and below
// (bar(j)|2|..|j-1|1|j+1|..|m) when it contains bar(j).
CheckReport check_containment(const FlagContext& ctx, const BuildOptions& opts = {});

// Every expected component has Schubert dimension exactly 2n.
CheckReport check_component_length(const FlagContext& ctx, const BuildOptions& opts = {});

// gamma(id, (1^m)) on the odd graph has exactly m components, equal as a set
// to expected_components, each of dimension 2n.
CheckReport check_curve_neighborhood(const FlagContext& ctx, const BuildOptions& opts = {});

// W^odd is the down-set of (bar(2)|bar(3)|..|bar(m+1)) inside W^P.
CheckReport check_wodd_downset(const FlagContext& ctx, const BuildOptions& opts = {});

// The top element of W^odd has length m(2n-m+1) = dim IF.
CheckReport check_top_dimension(const FlagContext& ctx, const BuildOptions& opts = {});

// All seven checks for one parameter point, sharing one graph build.
std::vector<CheckReport> run_point_checks(const FlagContext& ctx, const BuildOptions& opts = {});

// Checks over the grid {(n,m) : n_min <= n <= n_max, 1 <= m <= n}, optionally
// restricted to a single m.  Points may run concurrently; the report order is
// canonical (n, then m, then the fixed check order).
std::vector<CheckReport> run_grid_checks(int n_min, int n_max,
                                         std::optional<int> m_filter = {},
                                         const BuildOptions& opts = {});

bool all_passed(const std::vector<CheckReport>& reports);

std::string checks_json(const std::vector<CheckReport>& reports,
                        Notation notation = Notation::Bar);
std::string checks_table(const std::vector<CheckReport>& reports,
                         Notation notation = Notation::Bar);

}  // namespace oddflag
