#include "oddflag/root_system.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace oddflag {

Root diff_root(int i, int j) {
  if (i < 1 || j <= i) throw std::invalid_argument("diff_root requires 1 <= i < j");
  return Root{RootKind::Diff, i, j};
}

Root sum_root(int i, int j) {
  if (i < 1 || j <= i) throw std::invalid_argument("sum_root requires 1 <= i < j");
  return Root{RootKind::Sum, i, j};
}

Root long_root(int i) {
  if (i < 1) throw std::invalid_argument("long_root requires i >= 1");
  return Root{RootKind::Long, i, 0};
}

std::string to_string(const Root& r) {
  std::ostringstream os;
  switch (r.kind) {
    case RootKind::Diff: os << "t" << r.i << "-t" << r.j; break;
    case RootKind::Sum: os << "t" << r.i << "+t" << r.j; break;
    case RootKind::Long: os << "2t" << r.i; break;
  }
  return os.str();
}

FlagContext::FlagContext(int n_, int m_) : n(n_), m(m_) {
  if (n < 1 || n > 63) throw std::invalid_argument("flag context requires 1 <= n <= 63");
  if (m < 1 || m > n) throw std::invalid_argument("flag context requires 1 <= m <= n");
}

std::vector<int> FlagContext::q_degrees() const {
  std::vector<int> deg(m, 2);
  deg[m - 1] = 2 * (n - m) + 3;
  return deg;
}

bool DegreeVector::leq(const DegreeVector& o) const {
  if (d.size() != o.d.size())
    throw std::invalid_argument("degree vectors of different lengths are incomparable");
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] > o.d[k]) return false;
  return true;
}

DegreeVector DegreeVector::plus(const DegreeVector& o) const {
  if (d.size() != o.d.size())
    throw std::invalid_argument("degree vectors of different lengths cannot be added");
  DegreeVector out = *this;
  for (std::size_t k = 0; k < d.size(); ++k) out.d[k] += o.d[k];
  return out;
}

int DegreeVector::total() const {
  return std::accumulate(d.begin(), d.end(), 0);
}

namespace detail {

std::vector<Root> positive_roots_of_rank(int rank) {
  if (rank < 2) throw std::invalid_argument("root system rank must be at least 2");
  std::vector<Root> roots;
  roots.reserve(static_cast<std::size_t>(rank) * rank);
  for (int i = 1; i <= rank; ++i)
    for (int j = i + 1; j <= rank; ++j) roots.push_back(diff_root(i, j));
  for (int i = 1; i <= rank; ++i)
    for (int j = i + 1; j <= rank; ++j) roots.push_back(sum_root(i, j));
  for (int i = 1; i <= rank; ++i) roots.push_back(long_root(i));
  return roots;
}

}  // namespace detail

namespace {

void check_root_in_rank(const Root& r, int rank) {
  const bool pair = r.kind != RootKind::Long;
  if (r.i < 1 || r.i > rank || (pair && (r.j <= r.i || r.j > rank)))
    throw std::invalid_argument("root indices out of range for this context");
}

// Expansion of r in the simple roots alpha_1..alpha_rank.
std::vector<int> simple_root_coeffs(const Root& r, int rank) {
  std::vector<int> c(rank, 0);
  switch (r.kind) {
    case RootKind::Diff:
      for (int k = r.i; k < r.j; ++k) c[k - 1] += 1;
      break;
    case RootKind::Sum:
      // t_i + t_j = (t_i - t_j) + 2 t_j
      for (int k = r.i; k < r.j; ++k) c[k - 1] += 1;
      for (int k = r.j; k < rank; ++k) c[k - 1] += 2;
      c[rank - 1] += 1;
      break;
    case RootKind::Long:
      for (int k = r.i; k < rank; ++k) c[k - 1] += 2;
      c[rank - 1] += 1;
      break;
  }
  return c;
}

}  // namespace

std::vector<Root> positive_roots(const FlagContext& ctx) {
  return detail::positive_roots_of_rank(ctx.rank());
}

bool is_parabolic(const Root& r, const FlagContext& ctx) {
  check_root_in_rank(r, ctx.rank());
  const std::vector<int> c = simple_root_coeffs(r, ctx.rank());
  for (int k = 0; k < ctx.m; ++k)
    if (c[k] != 0) return false;
  return true;
}

std::vector<Root> parabolic_complement(const FlagContext& ctx) {
  std::vector<Root> out;
  for (const Root& r : positive_roots(ctx))
    if (!is_parabolic(r, ctx)) out.push_back(r);
  return out;
}

CorootCoeffs coroot_coeffs(const Root& r, const FlagContext& ctx) {
  const int rank = ctx.rank();
  check_root_in_rank(r, rank);
  CorootCoeffs c(rank, 0);
  switch (r.kind) {
    case RootKind::Diff:
      // (t_i - t_j)^vee = t_i - t_j telescopes over alpha_i^vee..alpha_{j-1}^vee
      for (int k = r.i; k < r.j; ++k) c[k - 1] = 1;
      break;
    case RootKind::Sum:
      // (t_i + t_j)^vee = (t_i - t_j) + 2 t_j
      for (int k = r.i; k < r.j; ++k) c[k - 1] = 1;
      for (int k = r.j; k <= rank; ++k) c[k - 1] = 2;
      break;
    case RootKind::Long:
      // (2 t_i)^vee = t_i = sum_{k >= i} (t_k - t_{k+1}) + t_{rank}
      for (int k = r.i; k <= rank; ++k) c[k - 1] = 1;
      break;
  }
  return c;
}

DegreeVector edge_degree(const Root& r, const FlagContext& ctx) {
  if (is_parabolic(r, ctx))
    throw std::invalid_argument("edge degree is undefined for parabolic-internal roots");
  const CorootCoeffs c = coroot_coeffs(r, ctx);
  return DegreeVector(std::vector<int>(c.begin(), c.begin() + ctx.m));
}

DegreeVector classify(const Root& r, const FlagContext& ctx) {
  if (is_parabolic(r, ctx))
    throw std::invalid_argument("degree class is undefined for parabolic-internal roots");
  const int m = ctx.m;
  std::vector<int> pattern(m, 0);
  const bool reaches_past_m = r.kind == RootKind::Long || r.j > m;
  if (reaches_past_m) {
    for (int k = r.i; k <= m; ++k) pattern[k - 1] = 1;
  } else if (r.kind == RootKind::Diff) {
    for (int k = r.i; k < r.j; ++k) pattern[k - 1] = 1;
  } else {
    for (int k = r.i; k < r.j; ++k) pattern[k - 1] = 1;
    for (int k = r.j; k <= m; ++k) pattern[k - 1] = 2;
  }
  return DegreeVector(std::move(pattern));
}

}  // namespace oddflag
