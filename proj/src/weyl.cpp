#include "oddflag/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oddflag {

namespace {

int unbar_of(int v, int rank) { return v <= rank ? v : 2 * rank + 1 - v; }

struct Axis {
  int index;
  int sign;
};

// t_value as a signed coordinate: t_{bar(v)} = -t_v.
Axis axis_of(int value, int rank) {
  if (value <= rank) return {value, +1};
  return {2 * rank + 1 - value, -1};
}

SignedRoot normalize_pair(int a, int ca, int b, int cb) {
  if (a > b) {
    std::swap(a, b);
    std::swap(ca, cb);
  }
  if (ca == cb) return {sum_root(a, b), ca > 0};
  return {diff_root(a, b), ca > 0};
}

void check_root_indices(const Root& r, int rank) {
  const bool pair = r.kind != RootKind::Long;
  if (r.i < 1 || r.i > rank || (pair && (r.j <= r.i || r.j > rank)))
    throw std::invalid_argument("root indices out of range for this window");
}

}  // namespace

Window identity_window(int rank) {
  if (rank < 2) throw std::invalid_argument("window rank must be at least 2");
  Window w;
  w.entries.resize(rank);
  std::iota(w.entries.begin(), w.entries.end(), 1);
  return w;
}

CosetRep identity_rep(const FlagContext& ctx) {
  std::vector<int> head(ctx.m);
  std::iota(head.begin(), head.end(), 1);
  return CosetRep{std::move(head)};
}

void validate_window(const Window& w) {
  const int rank = w.rank();
  if (rank < 2) throw std::invalid_argument("window must have at least 2 entries");
  std::vector<char> seen(rank + 1, 0);
  for (int v : w.entries) {
    if (v < 1 || v > 2 * rank) throw std::invalid_argument("window entry out of range");
    const int u = unbar_of(v, rank);
    if (seen[u]) throw std::invalid_argument("window entries repeat a bar pair");
    seen[u] = 1;
  }
}

void validate_head(const CosetRep& rep, const FlagContext& ctx) {
  if (static_cast<int>(rep.head.size()) != ctx.m)
    throw std::invalid_argument("head length must equal m");
  const int rank = ctx.rank();
  std::vector<char> seen(rank + 1, 0);
  for (int v : rep.head) {
    if (v < 1 || v > ctx.num_values())
      throw std::invalid_argument("head entry out of range");
    const int u = unbar_of(v, rank);
    if (seen[u]) throw std::invalid_argument("head entries repeat a bar pair");
    seen[u] = 1;
  }
}

SignedRoot apply_to_root(const Window& w, const Root& r) {
  const int rank = w.rank();
  check_root_indices(r, rank);
  switch (r.kind) {
    case RootKind::Long: {
      const Axis a = axis_of(w.entries[r.i - 1], rank);
      return {long_root(a.index), a.sign > 0};
    }
    case RootKind::Diff: {
      const Axis a = axis_of(w.entries[r.i - 1], rank);
      const Axis b = axis_of(w.entries[r.j - 1], rank);
      return normalize_pair(a.index, a.sign, b.index, -b.sign);
    }
    case RootKind::Sum: {
      const Axis a = axis_of(w.entries[r.i - 1], rank);
      const Axis b = axis_of(w.entries[r.j - 1], rank);
      return normalize_pair(a.index, a.sign, b.index, b.sign);
    }
  }
  throw std::logic_error("unhandled root kind");
}

int length(const Window& w) {
  validate_window(w);
  int inversions = 0;
  for (const Root& r : detail::positive_roots_of_rank(w.rank()))
    if (!apply_to_root(w, r).positive) ++inversions;
  return inversions;
}

Window reflect(const Window& w, const Root& r) {
  check_root_indices(r, w.rank());
  Window out = w;
  switch (r.kind) {
    case RootKind::Diff:
      std::swap(out.entries[r.i - 1], out.entries[r.j - 1]);
      break;
    case RootKind::Sum: {
      const int a = out.entries[r.i - 1];
      const int b = out.entries[r.j - 1];
      out.entries[r.i - 1] = out.bar(b);
      out.entries[r.j - 1] = out.bar(a);
      break;
    }
    case RootKind::Long:
      out.entries[r.i - 1] = out.bar(out.entries[r.i - 1]);
      break;
  }
  return out;
}

CosetRep head_of(const Window& w, int m) {
  if (m < 1 || m > w.rank()) throw std::invalid_argument("head length out of range");
  return CosetRep{std::vector<int>(w.entries.begin(), w.entries.begin() + m)};
}

Window min_rep(const CosetRep& rep, const FlagContext& ctx) {
  validate_head(rep, ctx);
  const int rank = ctx.rank();
  std::vector<char> used(rank + 1, 0);
  for (int v : rep.head) used[unbar_of(v, rank)] = 1;
  Window w;
  w.entries = rep.head;
  w.entries.reserve(rank);
  for (int v = 1; v <= rank; ++v)
    if (!used[v]) w.entries.push_back(v);
  return w;
}

bool in_wodd(const CosetRep& rep, const FlagContext& ctx) {
  const int top = ctx.num_values();  // bar(1)
  for (int v : rep.head)
    if (v >= top) return false;
  return true;
}

namespace {

void enumerate_heads(const FlagContext& ctx, int max_value, std::vector<CosetRep>& out) {
  const int rank = ctx.rank();
  std::vector<int> head;
  head.reserve(ctx.m);
  std::vector<char> used(rank + 1, 0);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(head.size()) == ctx.m) {
      out.push_back(CosetRep{head});
      return;
    }
    for (int v = 1; v <= max_value; ++v) {
      const int u = unbar_of(v, rank);
      if (used[u]) continue;
      used[u] = 1;
      head.push_back(v);
      self(self);
      head.pop_back();
      used[u] = 0;
    }
  };
  rec(rec);
}

}  // namespace

std::vector<CosetRep> enumerate_wp(const FlagContext& ctx) {
  std::vector<CosetRep> out;
  enumerate_heads(ctx, ctx.num_values(), out);
  return out;
}

std::vector<CosetRep> enumerate_wodd(const FlagContext& ctx) {
  std::vector<CosetRep> out;
  enumerate_heads(ctx, ctx.num_values() - 1, out);
  return out;
}

std::size_t wp_size_saturated(const FlagContext& ctx, std::size_t limit) {
  std::size_t total = 1;
  for (int k = 0; k < ctx.m; ++k) {
    const auto factor = static_cast<std::size_t>(ctx.num_values() - 2 * k);
    if (total > limit / factor) return limit + 1;
    total *= factor;
  }
  return total;
}

}  // namespace oddflag
