#include "oddflag/bruhat.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddflag {

std::vector<int> sorted_prefix(const CosetRep& rep, int k) {
  if (k < 1 || k > static_cast<int>(rep.head.size()))
    throw std::invalid_argument("prefix length out of range");
  std::vector<int> pre(rep.head.begin(), rep.head.begin() + k);
  std::sort(pre.begin(), pre.end());
  return pre;
}

bool bruhat_leq(const CosetRep& lambda, const CosetRep& delta) {
  const std::size_t m = lambda.head.size();
  if (m != delta.head.size())
    throw std::invalid_argument("coset reps have mismatched head lengths");
  // Grow both sorted prefixes one entry at a time and compare slotwise.
  std::vector<int> lam, del;
  lam.reserve(m);
  del.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    lam.insert(std::lower_bound(lam.begin(), lam.end(), lambda.head[k]), lambda.head[k]);
    del.insert(std::lower_bound(del.begin(), del.end(), delta.head[k]), delta.head[k]);
    for (std::size_t i = 0; i <= k; ++i)
      if (lam[i] > del[i]) return false;
  }
  return true;
}

std::vector<CosetRep> down_set(const CosetRep& lambda, const FlagContext& ctx,
                               bool odd_only) {
  validate_head(lambda, ctx);
  if (odd_only && !in_wodd(lambda, ctx))
    throw std::invalid_argument("lambda is not in W^odd");
  const std::vector<CosetRep> universe =
      odd_only ? enumerate_wodd(ctx) : enumerate_wp(ctx);
  std::vector<CosetRep> out;
  for (const CosetRep& mu : universe)
    if (bruhat_leq(mu, lambda)) out.push_back(mu);
  return out;
}

std::vector<CosetRep> maximal_elements(const std::vector<CosetRep>& s) {
  std::vector<CosetRep> maxima;
  for (const CosetRep& x : s) {
    bool dominated = false;
    for (const CosetRep& y : maxima) {
      if (bruhat_leq(x, y)) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    std::erase_if(maxima, [&](const CosetRep& y) { return bruhat_leq(y, x); });
    maxima.push_back(x);
  }
  std::sort(maxima.begin(), maxima.end());
  return maxima;
}

int schubert_dim(const CosetRep& lambda, const FlagContext& ctx) {
  return length(min_rep(lambda, ctx));
}

}  // namespace oddflag
