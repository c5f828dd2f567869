#include <random>

#include "cstq/lcp_rmq.hpp"
#include "cstq/slg.hpp"
#include "cstq/slg_stats.hpp"
#include "cstq/sparse_rmq.hpp"
#include "cstq/suffix_array.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cstq;
using namespace testing_support;

namespace {

using G = GrammarSymbol;
NonterminalId nt(std::uint32_t i) { return static_cast<NonterminalId>(i); }

PrefixSumStats scan_stats(const std::vector<std::int64_t>& b, std::size_t from, std::size_t len) {
  PrefixSumStats s{0, 0, 0};
  for (std::size_t t = 1; t <= len; ++t) {
    s.sum += b[from + t - 1];
    if (t == 1 || s.sum < s.min) {
      s.min = s.sum;
      s.argmin = static_cast<Index>(t);
    }
  }
  return s;
}

Index scan_argmin(const std::vector<std::int64_t>& values, Index b, Index e) {
  Index best = b + 1;
  for (Index i = b + 2; i <= e; ++i) {
    if (values[static_cast<std::size_t>(i - 1)] < values[static_cast<std::size_t>(best - 1)]) best = i;
  }
  return best;
}

// Rule i mentions only terminals and nonterminals below i; heights stay small.
Slg random_grammar(std::mt19937_64& rng, std::uint32_t k) {
  std::vector<Production> rules;
  std::vector<int> height(k, 1);
  for (std::uint32_t i = 0; i < k; ++i) {
    Rhs rhs;
    const int len = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < len; ++j) {
      const bool terminal = i == 0 || rng() % 3 == 0;
      if (terminal) {
        rhs.push_back(G::terminal(static_cast<std::int64_t>(rng() % 11) - 5));
      } else {
        std::uint32_t c = static_cast<std::uint32_t>(rng() % i);
        if (height[c] >= 6) c = 0;
        height[i] = std::max(height[i], height[c] + 1);
        rhs.push_back(G::nonterminal(nt(c)));
      }
    }
    rules.push_back({nt(i), rhs});
  }
  return Slg(rules, nt(k - 1));
}

}  // namespace

TEST_CASE("tiny grammars") {
  const Slg direct({{nt(0), {G::terminal('a'), G::terminal('b')}}}, nt(0));
  CHECK(expand(direct, nt(0)) == std::vector<std::int64_t>{'a', 'b'});

  const Slg g({{nt(0), {G::nonterminal(nt(1)), G::nonterminal(nt(1))}}, {nt(1), {G::terminal('a'), G::terminal('b')}}},
              nt(0));
  CHECK(expand(g, nt(0)) == std::vector<std::int64_t>{'a', 'b', 'a', 'b'});
  const auto sum = validate_slg(g);
  CHECK(sum.height == 2);
  CHECK(sum.size == 4);
  CHECK(g.expansion_length(nt(0)) == 4);
}

TEST_CASE("malformed grammars name the offending nonterminal") {
  auto offender = [](std::vector<Production> p, std::uint32_t start) {
    try {
      Slg g(std::move(p), nt(start));
    } catch (const GrammarError& e) {
      return static_cast<int>(to_index(e.nonterminal()));
    }
    return -1;
  };
  // cycle 1 -> 2 -> 1
  CHECK(offender({{nt(0), {G::nonterminal(nt(1))}},
                  {nt(1), {G::nonterminal(nt(2))}},
                  {nt(2), {G::nonterminal(nt(1)), G::terminal(0)}}},
                 0) >= 1);
  CHECK(offender({{nt(0), {G::terminal(1)}}, {nt(0), {G::terminal(2)}}}, 0) == 0);
  CHECK(offender({{nt(0), {G::nonterminal(nt(3))}}}, 0) == 3);
  CHECK(offender({{nt(1), {G::terminal(1)}}}, 1) == 0);

  const Slg empty({{nt(0), {G::nonterminal(nt(1)), G::terminal(1)}}, {nt(1), {}}}, nt(0));
  CHECK(validate_slg(empty).size == 3);
  CHECK_THROWS_AS(RuleStats{empty}, GrammarError);
}

TEST_CASE("pairing grammar and widening preserve the expansion") {
  std::mt19937_64 rng(40);
  for (int t = 0; t < 50; ++t) {
    std::vector<std::int64_t> values(1 + rng() % 300);
    for (auto& v : values) v = static_cast<std::int64_t>(rng() % 4);
    const Slg slp = build_pairing_slp(values);
    CHECK(expand(slp, slp.start()) == values);
    for (NonterminalId x : slp.bottom_up_order()) CHECK(slp.rhs(x).size() <= 2);
    for (int k = 1; k <= 3; ++k) {
      const Slg w = widen(slp, k);
      CHECK(expand(w, w.start()) == values);
      CHECK(w.height() <= (slp.height() + k - 1) / k + 1);
      for (NonterminalId x : w.bottom_up_order()) CHECK(static_cast<Index>(w.rhs(x).size()) <= (Index{2} << k));
    }
  }
}

TEST_CASE("rule statistics match linear scans on random grammars") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    const Slg g = random_grammar(rng, 2 + static_cast<std::uint32_t>(rng() % 10));
    const RuleStats stats(g);
    for (std::uint32_t i = 0; i < g.nonterminal_count(); ++i) {
      const auto b = expand(g, nt(i));
      const auto m = b.size();
      for (std::size_t p = 1; p <= m; ++p) {
        CHECK(stats.prefix(nt(i), static_cast<Index>(p)) == scan_stats(b, 0, p));
        CHECK(stats.suffix(nt(i), static_cast<Index>(p)) == scan_stats(b, m - p, p));
        if (p < m) {
          CHECK(stats.prefix(nt(i), static_cast<Index>(p)).sum + stats.suffix(nt(i), static_cast<Index>(m - p)).sum ==
                scan_stats(b, 0, m).sum);
        }
      }
      CHECK_THROWS_AS(stats.prefix(nt(i), 0), std::out_of_range);
      CHECK_THROWS_AS(stats.suffix(nt(i), static_cast<Index>(m) + 1), std::out_of_range);
    }
    // interval argmin over the start symbol's prefix sums
    const auto b = expand(g, g.start());
    std::vector<std::int64_t> sums(b.size());
    std::int64_t run = 0;
    for (std::size_t i = 0; i < b.size(); ++i) sums[i] = run += b[i];
    const Index n = static_cast<Index>(b.size());
    for (Index lo = 0; lo < n; ++lo) {
      for (Index hi = lo + 1; hi <= n; ++hi) CHECK(stats.interval_argmin(lo, hi) == scan_argmin(sums, lo, hi));
    }
    CHECK_THROWS_AS(stats.interval_argmin(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(stats.interval_argmin(0, n + 1), std::invalid_argument);
  }
}

TEST_CASE("prefix queries stay on one path") {
  const Text t = sample_text();
  const auto g = build_diff_lcp_slg(t, 0.5);
  const auto len = g.stats.expansion_length(g.stats.start());
  for (Index p = 1; p <= len; ++p) {
    StatsTrace trace;
    g.stats.prefix(g.stats.start(), p, &trace);
    CHECK(trace.rule_descents <= static_cast<std::size_t>(g.grammar.height()) + 1);
    CHECK(trace.predecessor_queries <= trace.rule_descents);
  }
}

TEST_CASE("sparse table argmin") {
  const SparseTableRmq rmq({5, 1, 2, 8, 4, 7, 6, 2, 9});
  CHECK(rmq.argmin(2, 9) == 3);
  CHECK(rmq.argmin(0, 9) == 2);
  CHECK(rmq.argmin(4, 5) == 5);
  CHECK_THROWS_AS(rmq.argmin(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(rmq.argmin(0, 10), std::invalid_argument);
  std::mt19937_64 rng(42);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::int64_t> a(1 + rng() % 256);
    for (auto& x : a) x = static_cast<std::int64_t>(rng() % 5);
    const SparseTableRmq r(a);
    const Index n = static_cast<Index>(a.size());
    for (Index lo = 0; lo < n; ++lo) {
      for (Index hi = lo + 1; hi <= n; ++hi) REQUIRE(r.argmin(lo, hi) == scan_argmin(a, lo, hi));
    }
  }
}

TEST_CASE("differential lcp grammar") {
  const auto unary = build_diff_lcp_slg(Text::from_alphabet("aaaa", "a"));
  CHECK(expand(unary.grammar, unary.grammar.start()) == std::vector<std::int64_t>{0, 1, 1, 1});
  const auto fig = build_diff_lcp_slg(sample_text());
  CHECK(expand(fig.grammar, fig.grammar.start()) ==
        std::vector<std::int64_t>{0, 1, 5, -5, 2, 5, -5, 2, 0, 2, -7, 2, 5, -5, 2, 5, -5, 2, -5});
  const auto single = build_diff_lcp_slg(Text({0}, 1));
  CHECK(expand(single.grammar, single.grammar.start()) == std::vector<std::int64_t>{0});
  CHECK_THROWS_AS(build_diff_lcp_slg(sample_text(), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_diff_lcp_slg(sample_text(), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_diff_lcp_slg(Text{}), std::invalid_argument);

  CHECK(widening_rounds(3, 0.5) == 1);
  CHECK(widening_rounds(16, 0.5) == 1);    // log log 16 = 2
  CHECK(widening_rounds(65536, 0.5) == 2); // log log 65536 = 4
  CHECK(widening_rounds(65536, 0.9) == 4);
}

TEST_CASE("lcp range minima and lce on the sample text") {
  const Text t = sample_text();
  const auto idx = LcpRmqIndex::build(t);
  CHECK(idx.lcp_rmq(1, 19) == 11);
  CHECK(idx.lcp_rmq(4, 5) == 5);
  CHECK(idx.lce(3, 12) == 8);
  CHECK(idx.lce(12, 3) == 8);
  for (Index i = 1; i <= 19; ++i) CHECK(idx.lce(i, i) == 20 - i);
  CHECK_THROWS_AS(idx.lce(0, 1), std::out_of_range);
  CHECK_THROWS_AS(idx.lcp_rmq(5, 5), std::invalid_argument);
  const auto rep = idx.report();
  CHECK(rep.n == 19);
  CHECK(rep.r == 6);
  CHECK(rep.max_rhs <= rep.rhs_bound);
}

TEST_CASE("random texts: every range and every pair") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const Symbol sigma = 2 + static_cast<Symbol>(trial % 3);
    const Text t = random_text(rng, 1 + static_cast<Index>(rng() % 64), sigma);
    const auto idx = LcpRmqIndex::build(t, 0.3 + 0.2 * (trial % 3));
    const auto lcp = lcp_array(t, suffix_array(t));
    std::vector<std::int64_t> lv(lcp.begin(), lcp.end());
    const Index n = t.size();
    for (Index i = 1; i <= n; ++i) CHECK(idx.lcp(i) == lcp[i]);
    for (Index b = 0; b < n; ++b) {
      for (Index e = b + 1; e <= n; ++e) REQUIRE(idx.lcp_rmq(b, e) == scan_argmin(lv, b, e));
    }
    for (Index i = 1; i <= n; ++i) {
      for (Index j = 1; j <= n; ++j) REQUIRE(idx.lce(i, j) == brute_lce(t, i, j));
    }
  }
}
