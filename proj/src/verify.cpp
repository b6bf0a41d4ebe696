#include "oddflag/verify.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "oddflag/parallel.hpp"

namespace oddflag {

namespace {

using Clock = std::chrono::steady_clock;

CheckReport finish(std::string name, const FlagContext& ctx,
                   std::vector<CosetRep> witnesses, Clock::time_point start) {
  std::sort(witnesses.begin(), witnesses.end());
  CheckReport report;
  report.name = std::move(name);
  report.n = ctx.n;
  report.m = ctx.m;
  report.passed = witnesses.empty();
  report.witnesses = std::move(witnesses);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

// Vertices of the odd graph reachable from the identity within degree (1^m).
std::vector<CosetRep> reach_within_ones(const FlagContext& ctx, const MomentGraph& odd) {
  return reachable(odd, {identity_rep(ctx)}, DegreeVector::ones(ctx.m));
}

bool head_contains(const CosetRep& rep, int value) {
  return std::find(rep.head.begin(), rep.head.end(), value) != rep.head.end();
}

std::vector<CosetRep> w_prefix_intersection(const FlagContext& ctx,
                                            const std::vector<CosetRep>& reach) {
  std::vector<CosetRep> witnesses;
  for (const CosetRep& v : reach) {
    for (int k = 1; k <= ctx.m; ++k) {
      const std::vector<int> pre = sorted_prefix(v, k);
      int hits = 0;
      for (int x : pre)
        if (x <= k) ++hits;
      if (hits < k - 1) {
        witnesses.push_back(v);
        break;
      }
    }
  }
  return witnesses;
}

std::vector<CosetRep> w_forced_one(const FlagContext& ctx,
                                   const std::vector<CosetRep>& reach) {
  std::vector<CosetRep> witnesses;
  for (const CosetRep& v : reach) {
    for (int j = 2; j <= ctx.m; ++j) {
      if (!head_contains(v, ctx.bar(j))) continue;
      const std::vector<int> pre = sorted_prefix(v, j);
      if (std::find(pre.begin(), pre.end(), 1) == pre.end()) {
        witnesses.push_back(v);
        break;
      }
    }
  }
  return witnesses;
}

std::vector<CosetRep> w_containment(const FlagContext& ctx,
                                    const std::vector<CosetRep>& reach) {
  const std::vector<CosetRep> tops = expected_components(ctx);
  std::vector<CosetRep> witnesses;
  for (const CosetRep& v : reach) {
    bool bad = false;
    const int head_max = *std::max_element(v.head.begin(), v.head.end());
    if (head_max <= ctx.bar(ctx.m + 1) && !bruhat_leq(v, tops[0])) bad = true;
    for (int j = 2; !bad && j <= ctx.m; ++j)
      if (head_contains(v, ctx.bar(j)) && !bruhat_leq(v, tops[j - 1])) bad = true;
    if (bad) witnesses.push_back(v);
  }
  return witnesses;
}

std::vector<CosetRep> w_component_length(const FlagContext& ctx) {
  std::vector<CosetRep> witnesses;
  for (const CosetRep& rep : expected_components(ctx))
    if (schubert_dim(rep, ctx) != 2 * ctx.n) witnesses.push_back(rep);
  return witnesses;
}

std::vector<CosetRep> w_curve_neighborhood(const FlagContext& ctx,
                                           const MomentGraph& odd) {
  const NeighborhoodResult nb =
      gamma(odd, identity_rep(ctx), DegreeVector::ones(ctx.m));
  std::vector<CosetRep> computed;
  for (const auto& c : nb.components) computed.push_back(c.rep);
  std::vector<CosetRep> expected = expected_components(ctx);
  std::sort(expected.begin(), expected.end());

  std::vector<CosetRep> witnesses;
  std::set_symmetric_difference(computed.begin(), computed.end(), expected.begin(),
                                expected.end(), std::back_inserter(witnesses));
  for (const auto& c : nb.components)
    if (c.dim != 2 * ctx.n) witnesses.push_back(c.rep);
  return witnesses;
}

std::vector<CosetRep> w_wodd_downset(const FlagContext& ctx) {
  CosetRep top;
  for (int k = 2; k <= ctx.m + 1; ++k) top.head.push_back(ctx.bar(k));
  const std::vector<CosetRep> closure = down_set(top, ctx, /*odd_only=*/false);
  const std::vector<CosetRep> odd = enumerate_wodd(ctx);
  std::vector<CosetRep> witnesses;
  std::set_symmetric_difference(closure.begin(), closure.end(), odd.begin(), odd.end(),
                                std::back_inserter(witnesses));
  return witnesses;
}

std::vector<CosetRep> w_top_dimension(const FlagContext& ctx) {
  CosetRep top;
  for (int k = 2; k <= ctx.m + 1; ++k) top.head.push_back(ctx.bar(k));
  std::vector<CosetRep> witnesses;
  if (schubert_dim(top, ctx) != ctx.dim_flag()) witnesses.push_back(top);
  return witnesses;
}

}  // namespace

CheckReport check_prefix_intersection(const FlagContext& ctx, const BuildOptions& opts) {
  const auto t0 = Clock::now();
  const MomentGraph odd = build_moment_graph(ctx, GraphKind::Odd, opts);
  return finish("prefix-intersection", ctx,
                w_prefix_intersection(ctx, reach_within_ones(ctx, odd)), t0);
}

CheckReport check_forced_one(const FlagContext& ctx, const BuildOptions& opts) {
  const auto t0 = Clock::now();
  const MomentGraph odd = build_moment_graph(ctx, GraphKind::Odd, opts);
  return finish("forced-one", ctx, w_forced_one(ctx, reach_within_ones(ctx, odd)), t0);
}

CheckReport check_containment(const FlagContext& ctx, const BuildOptions& opts) {
  const auto t0 = Clock::now();
  const MomentGraph odd = build_moment_graph(ctx, GraphKind::Odd, opts);
  return finish("containment", ctx, w_containment(ctx, reach_within_ones(ctx, odd)), t0);
}

CheckReport check_component_length(const FlagContext& ctx, const BuildOptions&) {
  const auto t0 = Clock::now();
  return finish("component-length", ctx, w_component_length(ctx), t0);
}

CheckReport check_curve_neighborhood(const FlagContext& ctx, const BuildOptions& opts) {
  const auto t0 = Clock::now();
  const MomentGraph odd = build_moment_graph(ctx, GraphKind::Odd, opts);
  return finish("curve-neighborhood", ctx, w_curve_neighborhood(ctx, odd), t0);
}

CheckReport check_wodd_downset(const FlagContext& ctx, const BuildOptions&) {
  const auto t0 = Clock::now();
  return finish("wodd-downset", ctx, w_wodd_downset(ctx), t0);
}

CheckReport check_top_dimension(const FlagContext& ctx, const BuildOptions&) {
  const auto t0 = Clock::now();
  return finish("top-dimension", ctx, w_top_dimension(ctx), t0);
}

std::vector<CheckReport> run_point_checks(const FlagContext& ctx, const BuildOptions& opts) {
  std::vector<CheckReport> reports;
  const MomentGraph odd = build_moment_graph(ctx, GraphKind::Odd, opts);
  const std::vector<CosetRep> reach = reach_within_ones(ctx, odd);

  auto t0 = Clock::now();
  reports.push_back(finish("prefix-intersection", ctx, w_prefix_intersection(ctx, reach), t0));
  t0 = Clock::now();
  reports.push_back(finish("forced-one", ctx, w_forced_one(ctx, reach), t0));
  t0 = Clock::now();
  reports.push_back(finish("containment", ctx, w_containment(ctx, reach), t0));
  t0 = Clock::now();
  reports.push_back(finish("component-length", ctx, w_component_length(ctx), t0));
  t0 = Clock::now();
  reports.push_back(finish("curve-neighborhood", ctx, w_curve_neighborhood(ctx, odd), t0));
  t0 = Clock::now();
  reports.push_back(finish("wodd-downset", ctx, w_wodd_downset(ctx), t0));
  t0 = Clock::now();
  reports.push_back(finish("top-dimension", ctx, w_top_dimension(ctx), t0));
  return reports;
}

std::vector<CheckReport> run_grid_checks(int n_min, int n_max,
                                         std::optional<int> m_filter,
                                         const BuildOptions& opts) {
  if (n_min < 1 || n_max < n_min)
    throw std::invalid_argument("grid bounds must satisfy 1 <= n_min <= n_max");
  std::vector<FlagContext> points;
  for (int n = n_min; n <= n_max; ++n)
    for (int m = 1; m <= n; ++m)
      if (!m_filter || *m_filter == m) points.emplace_back(n, m);

  std::vector<std::vector<CheckReport>> slots(points.size());
  BuildOptions point_opts = opts;
  point_opts.workers = 1;  // parallelism is across grid points
  parallel_for(points.size(), opts.workers, [&](std::size_t k) {
    slots[k] = run_point_checks(points[k], point_opts);
  });

  std::vector<CheckReport> reports;
  for (auto& slot : slots)
    for (auto& report : slot) reports.push_back(std::move(report));
  return reports;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.passed; });
}

std::string checks_json(const std::vector<CheckReport>& reports, Notation notation) {
  auto arr = nlohmann::json::array();
  for (const CheckReport& r : reports) {
    const FlagContext ctx(r.n, r.m);
    auto witnesses = nlohmann::json::array();
    for (const CosetRep& w : r.witnesses)
      witnesses.push_back(render_rep(w, ctx, notation));
    arr.push_back({{"check", r.name},
                   {"n", r.n},
                   {"m", r.m},
                   {"passed", r.passed},
                   {"witnesses", std::move(witnesses)},
                   {"elapsed_ms", r.elapsed_ms}});
  }
  return arr.dump(2) + "\n";
}

std::string checks_table(const std::vector<CheckReport>& reports, Notation notation) {
  std::ostringstream os;
  os << std::left << std::setw(22) << "check" << std::right << std::setw(4) << "n"
     << std::setw(4) << "m" << "  " << std::left << std::setw(6) << "result"
     << std::right << std::setw(10) << "ms" << "  witnesses\n";
  for (const CheckReport& r : reports) {
    const FlagContext ctx(r.n, r.m);
    os << std::left << std::setw(22) << r.name << std::right << std::setw(4) << r.n
       << std::setw(4) << r.m << "  " << std::left << std::setw(6)
       << (r.passed ? "pass" : "FAIL") << std::right << std::setw(10) << std::fixed
       << std::setprecision(2) << r.elapsed_ms << "  ";
    if (r.witnesses.empty()) {
      os << "-";
    } else {
      os << r.witnesses.size() << " (first: " << render_rep(r.witnesses.front(), ctx, notation)
         << ")";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace oddflag
