#include <random>

#include "cstq/predecessor.hpp"
#include "doctest.h"

using namespace cstq;

namespace {

Index oracle(const std::vector<Key>& keys, Key x) {
  Index c = 0;
  for (Key k : keys) c += k < x;
  return c;
}

void check_all_flavors(const std::vector<Key>& keys, Key u, Key x) {
  const StaticKeySet set(keys, u);
  const Index want = oracle(keys, x);
  CHECK(pred(set, x) == want);
  for (auto f : {PredecessorFlavor::yfast, PredecessorFlavor::smallset, PredecessorFlavor::binary}) {
    const PredecessorIndex idx(set, f);
    const Index got = idx.pred(x);
    CHECK(got == want);
    // Returned index brackets x.
    const Index m = set.size();
    if (got == 0) {
      CHECK((m == 0 || x <= set.key(1)));
    } else {
      CHECK(set.key(got) < x);
      CHECK((got == m || set.key(got + 1) >= x));
    }
  }
  CHECK(pred_color(set, x) == want % 2);
}

}  // namespace

TEST_CASE("worked predecessor examples") {
  const StaticKeySet set({2, 5, 7, 8, 10, 12}, 15);
  CHECK(pred(set, 9) == 4);
  CHECK(set.key(pred(set, 9)) == 8);
  CHECK(set.key(pred(set, 5)) == 2);
  CHECK(pred(set, 2) == 0);
  CHECK(pred(set, 13) == 6);
  CHECK(pred_color(set, 9) == 0);
  CHECK(pred_color(set, 8) == 1);
  CHECK(pred_color(set, 1) == 0);
  CHECK(pred_color(set, 2) == 0);
  for (Key x : {9, 5, 2, 13}) check_all_flavors(set.keys(), 15, x);
}

TEST_CASE("invalid key sets are rejected") {
  CHECK_THROWS_AS(StaticKeySet({3, 2}, 10), std::invalid_argument);
  CHECK_THROWS_AS(StaticKeySet({2, 2}, 10), std::invalid_argument);
  CHECK_THROWS_AS(StaticKeySet({2, 11}, 10), std::invalid_argument);
  CHECK_THROWS_AS(StaticKeySet({-1, 2}, 10), std::invalid_argument);
  CHECK_THROWS_AS(YFastTrie({1, 20}, 10), std::invalid_argument);
  CHECK_THROWS_AS(parse_predecessor_flavor("fusion"), std::invalid_argument);
  CHECK(parse_predecessor_flavor("smallset") == PredecessorFlavor::smallset);
  CHECK(to_string(PredecessorFlavor::yfast) == "yfast");
}

TEST_CASE("every subset of [0..15] and every query") {
  for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) {
    std::vector<Key> keys;
    for (Key k = 0; k < 16; ++k) {
      if (mask >> k & 1) keys.push_back(k);
    }
    const YFastTrie y(keys, 15);
    const SmallSetPredecessor s(keys);
    const BinarySearchPredecessor b(keys);
    for (Key x = -1; x <= 17; ++x) {
      const Index want = oracle(keys, x);
      if (y.pred(x) != want || s.pred(x) != want || b.pred(x) != want) {
        FAIL("mask " << mask << " x " << x);
      }
    }
  }
}

TEST_CASE("large random universe") {
  std::mt19937_64 rng(20);
  const Key u = Key{1} << 20;
  std::vector<Key> keys;
  for (int i = 0; i < 10000; ++i) keys.push_back(static_cast<Key>(rng() % (u + 1)));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  const YFastTrie y(keys, u);
  const SmallSetPredecessor s(keys);
  Index bad = 0;
  for (int q = 0; q < 100000; ++q) {
    const Key x = static_cast<Key>(rng() % (u + 3)) - 1;
    const Index want = static_cast<Index>(std::lower_bound(keys.begin(), keys.end(), x) - keys.begin());
    bad += y.pred(x) != want;
    bad += s.pred(x) != want;
  }
  CHECK(bad == 0);
}

TEST_CASE("small sets of assorted shapes") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    const Key u = 1 + static_cast<Key>(rng() % 5000);
    std::vector<Key> keys;
    const int m = static_cast<int>(rng() % 200);
    for (int i = 0; i < m; ++i) keys.push_back(static_cast<Key>(rng() % (u + 1)));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (int q = 0; q < 20; ++q) check_all_flavors(keys, u, static_cast<Key>(rng() % (u + 3)) - 1);
  }
}
