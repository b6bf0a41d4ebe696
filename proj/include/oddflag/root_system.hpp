#pragma once

#include <compare>
#include <string>
#include <vector>

namespace oddflag {

// Positive roots of type C_{n+1} on the coordinates t_1..t_{n+1}:
//   Diff(i,j) = t_i - t_j,  Sum(i,j) = t_i + t_j  (1 <= i < j <= n+1),
//   Long(i)   = 2 t_i       (1 <= i <= n+1).
enum class RootKind { Diff, Sum, Long };

struct Root {
  RootKind kind = RootKind::Diff;
  int i = 0;  // 1-based
  int j = 0;  // 1-based second index; 0 for Long
  friend constexpr auto operator<=>(const Root&, const Root&) = default;
};

Root diff_root(int i, int j);
Root sum_root(int i, int j);
Root long_root(int i);

// "t1-t2", "t1+t2", "2t1"
std::string to_string(const Root& r);

// Parameters of the flag variety IF(1,..,m;2n+1).  Simple roots are
// alpha_i = t_i - t_{i+1} (i <= n) and alpha_{n+1} = 2 t_{n+1}; the parabolic
// keeps alpha_{m+1}..alpha_{n+1}.  Values of the signed-permutation alphabet
// are 1..2n+2 with bar(v) = 2n+3-v.
struct FlagContext {
  int n = 1;
  int m = 1;

  FlagContext(int n_, int m_);

  int rank() const { return n + 1; }
  int num_values() const { return 2 * n + 2; }
  int bar(int v) const { return 2 * n + 3 - v; }
  int dim_flag() const { return m * (2 * n - m + 1); }

  // deg q_i = 2 for i < m, deg q_m = 2(n-m)+3
  std::vector<int> q_degrees() const;

  friend bool operator==(const FlagContext&, const FlagContext&) = default;
};

// Coefficients of a coroot in the simple-coroot basis; length n+1.
using CorootCoeffs = std::vector<int>;

// First m coroot coefficients of a root, i.e. the degree contributed by the
// corresponding moment-graph edge.  Ordered componentwise via leq(); the
// spaceship operator is lexicographic and only used for canonical sorting.
struct DegreeVector {
  std::vector<int> d;

  DegreeVector() = default;
  explicit DegreeVector(std::vector<int> v) : d(std::move(v)) {}
  static DegreeVector zeros(int m) { return DegreeVector(std::vector<int>(m, 0)); }
  static DegreeVector ones(int m) { return DegreeVector(std::vector<int>(m, 1)); }

  int size() const { return static_cast<int>(d.size()); }
  int operator[](int k) const { return d[k]; }

  bool leq(const DegreeVector& o) const;
  DegreeVector plus(const DegreeVector& o) const;
  int total() const;

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
  friend auto operator<=>(const DegreeVector&, const DegreeVector&) = default;
};

// All (n+1)^2 positive roots: the Diff family, then Sum, then Long, each in
// lexicographic index order.
std::vector<Root> positive_roots(const FlagContext& ctx);

// True iff r lies in R_P^+, i.e. its simple-root expansion has zero
// coefficients on alpha_1..alpha_m.
bool is_parabolic(const Root& r, const FlagContext& ctx);

// R^+ \ R_P^+, in positive_roots order; count = m^2 + 2m(n+1-m).
std::vector<Root> parabolic_complement(const FlagContext& ctx);

// Expansion of r^vee in the simple coroots alpha_1^vee..alpha_{n+1}^vee.
CorootCoeffs coroot_coeffs(const Root& r, const FlagContext& ctx);

// First m coroot coefficients; rejects parabolic-internal roots.
DegreeVector edge_degree(const Root& r, const FlagContext& ctx);

// Degree class of r per the pattern case split: (0^a 1^b 0^c) for short roots
// t_i-t_j with j <= m, (0^a 1^b) for roots reaching past position m, and
// (0^a 1^b 2^c) for t_i+t_j with j <= m.  Always equals edge_degree(r).
DegreeVector classify(const Root& r, const FlagContext& ctx);

namespace detail {
// Positive roots of C_rank, independent of a flag context.
std::vector<Root> positive_roots_of_rank(int rank);
}  // namespace detail

}  // namespace oddflag
