#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "oddflag/weyl.hpp"
#include "oracles.hpp"

using namespace oddflag;

namespace {

Window window_of(std::vector<int> entries) { return Window{std::move(entries)}; }
CosetRep rep_of(std::vector<int> head) { return CosetRep{std::move(head)}; }

}  // namespace

TEST_CASE("root action: identity fixes every positive root") {
  const Window id = identity_window(4);
  for (const Root& r : detail::positive_roots_of_rank(4)) {
    const SignedRoot image = apply_to_root(id, r);
    CHECK(image.root == r);
    CHECK(image.positive);
  }
}

TEST_CASE("root action: sign flips") {
  // n = 1: w(1) = bar(1) sends t_1 to -t_1
  const Window flip = window_of({4, 2});
  const SignedRoot lng = apply_to_root(flip, long_root(1));
  CHECK(lng.root == long_root(1));
  CHECK_FALSE(lng.positive);

  // the transposition inverts its own root
  const Window swap = window_of({2, 1});
  const SignedRoot dif = apply_to_root(swap, diff_root(1, 2));
  CHECK(dif.root == diff_root(1, 2));
  CHECK_FALSE(dif.positive);
}

TEST_CASE("length of known windows") {
  CHECK(length(identity_window(3)) == 0);
  CHECK(length(window_of({4, 2, 1})) == 4);  // min_rep of (b3|2) at n=2
  CHECK(length(window_of({5, 1, 3})) == 4);  // min_rep of (b2|1) at n=2
  CHECK(length(window_of({5, 4, 1})) == 6);  // min_rep of (b2|b3) at n=2
}

TEST_CASE("length agrees with Cayley-graph distance") {
  for (int rank = 2; rank <= 3; ++rank) {
    const auto dist = oracles::cayley_distances(rank);
    CHECK(dist.size() == (rank == 2 ? 8u : 48u));
    for (const auto& [entries, d] : dist)
      CHECK(length(Window{entries}) == d);
  }
  // rank 4: spot-check a sample of the 384 elements
  const auto dist = oracles::cayley_distances(4);
  CHECK(dist.size() == 384u);
  std::mt19937 rng(20240811);
  std::vector<std::vector<int>> keys;
  for (const auto& [entries, d] : dist) keys.push_back(entries);
  std::shuffle(keys.begin(), keys.end(), rng);
  for (std::size_t k = 0; k < 64; ++k) {
    const auto& entries = keys[k];
    CHECK(length(Window{entries}) == dist.at(entries));
  }
}

TEST_CASE("reflections act as described on the identity") {
  const Window id = identity_window(4);
  CHECK(reflect(id, diff_root(1, 2)).entries == std::vector<int>{2, 1, 3, 4});
  CHECK(reflect(id, long_root(1)).entries == std::vector<int>{8, 2, 3, 4});
  CHECK(reflect(id, sum_root(1, 2)).entries == std::vector<int>{7, 8, 3, 4});
}

TEST_CASE("reflections are involutive and produce valid windows") {
  std::mt19937 rng(7);
  for (int rank = 2; rank <= 4; ++rank) {
    const auto roots = detail::positive_roots_of_rank(rank);
    for (int trial = 0; trial < 25; ++trial) {
      // random window: shuffle 1..rank and bar a random subset
      std::vector<int> entries(rank);
      std::iota(entries.begin(), entries.end(), 1);
      std::shuffle(entries.begin(), entries.end(), rng);
      for (int& v : entries)
        if (rng() & 1) v = 2 * rank + 1 - v;
      const Window w{entries};
      validate_window(w);
      for (const Root& r : roots) {
        const Window once = reflect(w, r);
        validate_window(once);
        CHECK(reflect(once, r) == w);
      }
    }
  }
}

TEST_CASE("reflections always change the length") {
  const FlagContext small(2, 2);
  for (const CosetRep& rep : enumerate_wp(small)) {
    const Window w = min_rep(rep, small);
    const int len = length(w);
    for (const Root& r : positive_roots(small))
      CHECK(length(reflect(w, r)) != len);
  }

  std::mt19937 rng(333);
  for (int rank = 3; rank <= 4; ++rank) {
    const auto roots = detail::positive_roots_of_rank(rank);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> entries(rank);
      std::iota(entries.begin(), entries.end(), 1);
      std::shuffle(entries.begin(), entries.end(), rng);
      for (int& v : entries)
        if (rng() & 1) v = 2 * rank + 1 - v;
      const Window w{entries};
      const int len = length(w);
      for (const Root& r : roots) CHECK(length(reflect(w, r)) != len);
    }
  }
}

TEST_CASE("min_rep fills the tail with unused pair representatives") {
  const FlagContext big(5, 3);
  CHECK(min_rep(rep_of({1, 11, 3}), big).entries == std::vector<int>{1, 11, 3, 4, 5, 6});

  const FlagContext ctx(2, 2);
  CHECK(min_rep(rep_of({1, 2}), ctx).entries == std::vector<int>{1, 2, 3});
  CHECK(min_rep(rep_of({4, 2}), ctx).entries == std::vector<int>{4, 2, 1});
}

TEST_CASE("min_rep is the unique length minimum of its coset") {
  // exhaustive over every coset of the small grid
  const std::pair<int, int> grid[] = {{2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}};
  for (const auto& [n, m] : grid) {
    const FlagContext ctx(n, m);
    for (const CosetRep& rep : enumerate_wp(ctx)) {
      const Window best = min_rep(rep, ctx);
      const int best_len = length(best);
      int ties = 0;
      for (const Window& w : oracles::coset_windows(rep, ctx)) {
        const int len = length(w);
        CHECK(len >= best_len);
        if (len == best_len) {
          ++ties;
          CHECK(w == best);
        }
      }
      CHECK(ties == 1);
    }
  }
  // the (5,3) example coset is small enough to brute force directly
  const FlagContext big(5, 3);
  const CosetRep rep = rep_of({1, 11, 3});
  const Window best = min_rep(rep, big);
  for (const Window& w : oracles::coset_windows(rep, big))
    CHECK(length(w) >= length(best));
}

TEST_CASE("min_rep rejects malformed heads") {
  const FlagContext ctx(2, 2);
  CHECK_THROWS_AS(min_rep(rep_of({1, 1}), ctx), std::invalid_argument);
  CHECK_THROWS_AS(min_rep(rep_of({2, 5}), ctx), std::invalid_argument);  // bar pair
  CHECK_THROWS_AS(min_rep(rep_of({0, 2}), ctx), std::invalid_argument);
  CHECK_THROWS_AS(min_rep(rep_of({1, 7}), ctx), std::invalid_argument);
  CHECK_THROWS_AS(min_rep(rep_of({1}), ctx), std::invalid_argument);
}

TEST_CASE("enumeration counts and order") {
  const FlagContext ctx(2, 2);
  const auto wp = enumerate_wp(ctx);
  CHECK(wp.size() == 24);
  const auto wodd = enumerate_wodd(ctx);
  CHECK(wodd.size() == 16);

  CHECK(std::is_sorted(wp.begin(), wp.end()));
  CHECK(std::adjacent_find(wp.begin(), wp.end()) == wp.end());
  CHECK(std::is_sorted(wodd.begin(), wodd.end()));

  // W^odd is exactly the filter of W^P by "no entry equals 2n+2"
  std::vector<CosetRep> filtered;
  for (const CosetRep& rep : wp)
    if (in_wodd(rep, ctx)) filtered.push_back(rep);
  CHECK(filtered == wodd);

  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= n; ++m) {
      const FlagContext c(n, m);
      std::size_t expected = 1;
      for (int k = 0; k < m; ++k) expected *= static_cast<std::size_t>(2 * n + 2 - 2 * k);
      CHECK(enumerate_wp(c).size() == expected);
      CHECK(wp_size_saturated(c, 1u << 30) == expected);
    }
  }

  CHECK(enumerate_wp(FlagContext(1, 1)).size() == 4);
}

TEST_CASE("membership in W^odd matches the worked example at n=5, m=3") {
  const FlagContext ctx(5, 3);
  const auto wodd = enumerate_wodd(ctx);
  auto contains = [&](const CosetRep& rep) {
    return std::binary_search(wodd.begin(), wodd.end(), rep);
  };
  CHECK(contains(rep_of({1, 11, 3})));   // (1|b2|3)
  CHECK(contains(rep_of({5, 9, 2})));    // (5|b4|2)
  CHECK_FALSE(contains(rep_of({3, 12, 2})));  // (3|b1|2) has a bar(1) entry
  validate_head(rep_of({3, 12, 2}), ctx);      // but it is a valid W^P head
  CHECK_FALSE(in_wodd(rep_of({3, 12, 2}), ctx));
}

TEST_CASE("size saturation never overflows") {
  const FlagContext huge(63, 63);
  CHECK(wp_size_saturated(huge, 100000) == 100001);
}
