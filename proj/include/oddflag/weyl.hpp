#pragma once

#include "oddflag/root_system.hpp"

namespace oddflag {

// A signed permutation w of {1..n+1, bar(n+1)..bar(1)} stored through its
// window (w(1),..,w(n+1)) in the integer encoding bar(v) = 2n+3-v.  Exactly
// one value of each bar pair {v, bar(v)} appears among the entries; the
// action on barred positions is determined by w(bar i) = bar(w(i)).
struct Window {
  std::vector<int> entries;

  int rank() const { return static_cast<int>(entries.size()); }
  int bar(int v) const { return 2 * rank() + 1 - v; }

  friend bool operator==(const Window&, const Window&) = default;
  friend auto operator<=>(const Window&, const Window&) = default;
};

// A coset in W/W_P named by its first m window entries.
struct CosetRep {
  std::vector<int> head;

  friend bool operator==(const CosetRep&, const CosetRep&) = default;
  friend auto operator<=>(const CosetRep&, const CosetRep&) = default;
};

struct SignedRoot {
  Root root;
  bool positive = true;
};

Window identity_window(int rank);
CosetRep identity_rep(const FlagContext& ctx);

void validate_window(const Window& w);
void validate_head(const CosetRep& rep, const FlagContext& ctx);

// Image of a positive root under w, with t_{bar(v)} = -t_v.
SignedRoot apply_to_root(const Window& w, const Root& r);

// Coxeter length: the number of positive roots sent to negative ones.
int length(const Window& w);

// Right multiplication by the reflection of r: Diff(i,j) swaps positions i,j;
// Sum(i,j) swaps them with bars; Long(i) bars position i.  Involutive.
Window reflect(const Window& w, const Root& r);

CosetRep head_of(const Window& w, int m);

// Minimal-length representative of the coset with the given head: the tail
// holds the unbarred representatives of the unused bar pairs, increasing.
Window min_rep(const CosetRep& rep, const FlagContext& ctx);

// True iff every head entry is below bar(1) = 2n+2.
bool in_wodd(const CosetRep& rep, const FlagContext& ctx);

// All coset heads in lexicographic order; |W^P| = prod_{k<m} (2n+2-2k).
std::vector<CosetRep> enumerate_wp(const FlagContext& ctx);

// The heads avoiding the value 2n+2, in lexicographic order.
std::vector<CosetRep> enumerate_wodd(const FlagContext& ctx);

// |W^P|, saturating at limit+1 so cap checks cannot overflow.
std::size_t wp_size_saturated(const FlagContext& ctx, std::size_t limit);

}  // namespace oddflag
