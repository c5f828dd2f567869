#include <random>

#include "cstq/suffix_array.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cstq;
using namespace testing_support;

namespace {

std::vector<Index> v(const OneBased<Index>& a) { return a.values(); }

std::string bwt_string(const OneBased<Symbol>& bwt) {
  std::string s;
  for (Symbol c : bwt) s += "ab"[c];
  return s;
}

}  // namespace

TEST_CASE("sample text reproduces every array row") {
  const auto b = build_bundle(sample_text());
  CHECK(v(b.sa) == ints({19, 14, 5, 17, 12, 3, 15, 10, 8, 6, 18, 13, 4, 16, 11, 2, 9, 7, 1}));
  CHECK(v(b.lcp) == ints({0, 1, 6, 1, 3, 8, 3, 5, 5, 7, 0, 2, 7, 2, 4, 9, 4, 6, 1}));
  CHECK(bwt_string(b.bwt) == "bbbbbbabbaaaaaabaaa");
  CHECK(v(b.lf) == ints({11, 12, 13, 14, 15, 16, 2, 17, 18, 3, 4, 5, 6, 7, 8, 19, 9, 10, 1}));
  CHECK(v(b.ilf) == ints({19, 7, 10, 11, 12, 13, 14, 15, 17, 18, 1, 2, 3, 4, 5, 6, 8, 9, 16}));
  CHECK(v(b.isa) == ints({19, 16, 6, 13, 3, 10, 18, 9, 17, 8, 15, 5, 12, 2, 7, 14, 4, 11, 1}));
  CHECK(v(b.phi) == ints({7, 11, 12, 13, 14, 8, 9, 10, 2, 15, 16, 17, 18, 19, 3, 4, 5, 6, 1}));
  CHECK(v(b.inv_phi) == ints({19, 9, 15, 16, 17, 18, 1, 6, 7, 8, 2, 3, 4, 5, 10, 11, 12, 13, 14}));
  CHECK(v(b.plcp) == ints({1, 9, 8, 7, 6, 7, 6, 5, 4, 5, 4, 3, 2, 1, 3, 2, 1, 0, 0}));
}

TEST_CASE("single symbol text") {
  const auto b = build_bundle(Text::from_alphabet("a", "a"));
  for (const auto* arr : {&b.sa, &b.isa, &b.lf, &b.ilf, &b.phi, &b.inv_phi}) CHECK(v(*arr) == ints({1}));
  CHECK(v(b.lcp) == ints({0}));
  CHECK(v(b.plcp) == ints({0}));
  CHECK(b.bwt.values() == std::vector<Symbol>{0});
}

TEST_CASE("empty input is rejected") {
  CHECK_THROWS_AS(build_bundle(Text{}), std::invalid_argument);
  CHECK_THROWS_AS(suffix_array(Text{}), std::invalid_argument);
  CHECK_THROWS_AS(Text({0, 3}, 2), std::invalid_argument);
  CHECK_THROWS_AS(Text({0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(Text::from_alphabet("abc", "ab"), std::invalid_argument);
}

TEST_CASE("text helpers") {
  const Text t = Text::from_alphabet("abba", "ab");
  CHECK(t.to_string("ab") == "abba");
  CHECK(t.reversed().to_string("ab") == "abba");
  CHECK(Text::from_alphabet("aab", "ab").reversed().to_string("ab") == "baa");
  const Text w = t.appended(2);
  CHECK(w.sigma() == 3);
  CHECK(w.to_string("abc") == "abbac");
  CHECK_THROWS_AS(t.at(0), std::out_of_range);
  CHECK_THROWS_AS(t.at(5), std::out_of_range);
  CHECK(Text::from_bytes("01").symbols()[0] == '0');
}

TEST_CASE("pattern ranges") {
  const Text t = sample_text();
  const auto sa = suffix_array(t);
  CHECK(pattern_range(t, sa, Text::from_alphabet("ababa", "ab")) == PatternRange{6, 10});
  CHECK(pattern_range(t, sa, std::span<const Symbol>{}) == PatternRange{0, 19});
  CHECK(pattern_range(t, sa, Text::from_alphabet("aaa", "ab")) == PatternRange{1, 1});

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Text s = random_text(rng, 1 + static_cast<Index>(rng() % 40), 2 + static_cast<Symbol>(rng() % 2));
    const auto ssa = suffix_array(s);
    const Text p = random_text(rng, static_cast<Index>(rng() % 5), s.sigma());
    const auto pr = pattern_range(s, ssa, p.symbols());
    // Occurrences, by scanning the text.
    std::vector<Index> occ;
    for (Index j = 1; j <= s.size() && j + p.size() - 1 <= s.size(); ++j) {
      if (std::equal(p.symbols().begin(), p.symbols().end(), s.symbols().begin() + (j - 1))) occ.push_back(j);
    }
    CHECK(pr.count() == static_cast<Index>(occ.size()));
    CHECK(pr.range_beg == range_beg_by_scan(s, p.symbols()));
    std::vector<Index> got;
    for (Index i = pr.range_beg + 1; i <= pr.range_end; ++i) got.push_back(ssa[i]);
    std::sort(got.begin(), got.end());
    CHECK(got == occ);
  }
}

TEST_CASE("lce naive") {
  const Text t = sample_text();
  CHECK(lce_naive(t, 3, 12) == 8);
  CHECK(lce_naive(t, 12, 3) == 8);
  for (Index i = 1; i <= t.size(); ++i) CHECK(lce_naive(t, i, i) == t.size() - i + 1);
  CHECK(lce_naive(Text::from_alphabet("ab", "ab"), 1, 2) == 0);
  CHECK_THROWS_AS(lce_naive(t, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(lce_naive(t, 1, 20), std::out_of_range);
}

TEST_CASE("random texts agree with brute-force suffix sorting") {
  std::mt19937_64 rng(7);
  for (Symbol sigma : {2u, 4u, 26u}) {
    for (int trial = 0; trial < 60; ++trial) {
      const Index n = 1 + static_cast<Index>(rng() % 512);
      const Text t = random_text(rng, n, sigma);
      const auto b = build_bundle(t);
      REQUIRE(v(b.sa) == brute_sa(t));
      CHECK(b.sa == suffix_array_naive(t));

      Index n0 = 0;
      for (Index j = 1; j <= n; ++j) n0 += t[j] == 0;
      for (Index i = 1; i <= n; ++i) {
        CHECK(b.isa[b.sa[i]] == i);
        if (i > 1) CHECK(b.lcp[i] == brute_lce(t, b.sa[i], b.sa[i - 1]));
        CHECK(b.plcp[b.sa[i]] == b.lcp[i]);
        const Index prev = b.sa[i] == 1 ? n : b.sa[i] - 1;
        CHECK(b.bwt[i] == t[prev]);
        CHECK(b.lf[i] == b.isa[prev]);
        CHECK(b.ilf[b.lf[i]] == i);
        CHECK(b.phi[b.sa[i]] == b.sa[i == 1 ? n : i - 1]);
        CHECK(b.inv_phi[b.phi[b.sa[i]]] == b.sa[i]);
        if (sigma == 2) {
          CHECK((b.bwt[i] == 0) == (b.lf[i] <= n0));
          CHECK((t[i] == 0) == (b.isa[i] <= n0));
        }
      }
      CHECK(b.lcp[1] == 0);
      CHECK(b.plcp[b.sa[1]] == 0);
      for (Index j = 1; j <= n; ++j) {
        if (j != b.sa[1]) CHECK(b.plcp[j] == brute_lce(t, j, b.phi[j]));
      }
    }
  }
}

TEST_CASE("leading zero exposes symbols through lce") {
  std::mt19937_64 rng(5);
  const Text t = random_text(rng, 64, 2);
  std::vector<Symbol> s{0};
  s.insert(s.end(), t.symbols().begin(), t.symbols().end());
  const Text z(s, 2);
  for (Index j = 1; j <= t.size(); ++j) CHECK((lce_naive(z, 1, j + 1) >= 1) == (t[j] == 0));
}

TEST_CASE("run counting") {
  const std::vector<Symbol> s{0, 0, 1, 1, 1, 0, 1};
  CHECK(count_runs(s) == 4);
  CHECK(count_runs(std::span<const Symbol>{}) == 0);
}
