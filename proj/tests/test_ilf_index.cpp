#include <random>

#include "cstq/ilf_index.hpp"
#include "cstq/measures.hpp"
#include "cstq/suffix_array.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cstq;
using namespace testing_support;

TEST_CASE("terminator shifts symbols up by one") {
  const auto tt = append_terminator(Text::from_alphabet("ab", "ab"));
  CHECK(std::vector<Symbol>(tt.shifted.symbols().begin(), tt.shifted.symbols().end()) == std::vector<Symbol>{1, 2, 0});
  CHECK(tt.shifted.sigma() == 3);
  CHECK(tt.i_first == 1);
  CHECK(tt.i_last == 2);
  CHECK_THROWS_AS(append_terminator(Text({0}, std::numeric_limits<Symbol>::max())), std::overflow_error);
}

TEST_CASE("terminated suffix order") {
  std::mt19937_64 rng(30);
  for (int i = 0; i < 100; ++i) {
    const Text t = random_text(rng, 1 + static_cast<Index>(rng() % 100), 2 + static_cast<Symbol>(i % 3));
    const auto tt = append_terminator(t);
    const auto sa = suffix_array(t);
    const auto sa2 = suffix_array(tt.shifted);
    CHECK(sa2[1] == t.size() + 1);
    for (Index k = 1; k <= t.size(); ++k) CHECK(sa2[k + 1] == sa[k]);
    CHECK(bwt_run_count(tt.shifted) <= bwt_run_count(t) + 3);
    const auto isa = inverse_permutation(sa);
    CHECK(tt.i_first == isa[1]);
    CHECK(tt.i_last == isa[t.size()]);

    // Equal neighbouring BWT symbols map to consecutive LF values.
    const auto b = build_bundle(tt.shifted);
    for (Index k = 2; k <= tt.shifted.size(); ++k) {
      if (b.bwt[k] == b.bwt[k - 1]) CHECK(b.lf[k] == b.lf[k - 1] + 1);
    }
  }
}

TEST_CASE("rank remapping") {
  const Text t({5, 9, 5, 2}, 10);
  const Text r = remap_to_ranks(t);
  CHECK(std::vector<Symbol>(r.symbols().begin(), r.symbols().end()) == std::vector<Symbol>{1, 2, 1, 0});
  CHECK(r.sigma() == 3);
  CHECK(bwt_run_count(r) == bwt_run_count(t));
}

TEST_CASE("sample text queries") {
  const Text t = sample_text();
  const auto idx = IlfIndex::build(t);
  CHECK(idx.query(2) == 7);
  CHECK(idx.query(1) == 19);
  CHECK(idx.query(19) == 16);
  CHECK(idx.boundary_count() <= 6 + 3);
  CHECK(idx.boundary_count() == bwt_run_count(append_terminator(t).shifted));
  CHECK_THROWS_AS(idx.query(0), std::out_of_range);
  CHECK_THROWS_AS(idx.query(20), std::out_of_range);
}

TEST_CASE("degenerate texts") {
  const auto one = IlfIndex::build(Text({0}, 1));
  CHECK(one.query(1) == 1);

  const Text unary = Text::from_alphabet("aaaaaaaa", "a");
  const auto u = IlfIndex::build(unary);
  CHECK(u.boundary_count() == bwt_run_count(append_terminator(unary).shifted));
  for (Index i = 1; i <= 8; ++i) CHECK(u.query(i) == build_bundle(unary).ilf[i]);

  std::vector<Symbol> distinct{3, 0, 7, 1, 5, 2, 6, 4};
  const auto d = IlfIndex::build(Text(distinct, 8));
  CHECK(d.boundary_count() == 9);
}

TEST_CASE("every flavor matches the bundle on random texts") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 60; ++i) {
    const Symbol sigma = std::array<Symbol, 3>{2, 4, 26}[static_cast<std::size_t>(i % 3)];
    const Text t = random_text(rng, 1 + static_cast<Index>(rng() % 600), sigma);
    const auto oracle = build_bundle(t);
    for (auto f : {PredecessorFlavor::yfast, PredecessorFlavor::smallset, PredecessorFlavor::binary}) {
      const auto idx = IlfIndex::build(t, f);
      CHECK(idx.flavor() == f);
      IlfQueryCounters counters;
      Index bad = 0;
      for (Index k = 1; k <= t.size(); ++k) {
        const auto before = counters.predecessor_queries;
        bad += idx.query(k, &counters) != oracle.ilf[k];
        CHECK(counters.predecessor_queries - before <= 1);
      }
      CHECK(bad == 0);
      CHECK(idx.boundary_count() == idx.terminated_runs());
      CHECK(idx.terminated_runs() <= bwt_run_count(t) + 3);
      CHECK(std::is_sorted(idx.boundary_keys().begin(), idx.boundary_keys().end()));
      CHECK(idx.boundary_keys().front() == 1);
    }
  }
}
