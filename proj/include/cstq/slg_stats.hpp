#pragma once

#include <optional>
#include <vector>

#include "cstq/predecessor.hpp"
#include "cstq/slg.hpp"
#include "cstq/sparse_rmq.hpp"

namespace cstq {

// Sum of a stretch B[1..p] and the minimum of its prefix sums, first attained at argmin.
struct PrefixSumStats {
  std::int64_t sum = 0;
  std::int64_t min = 0;
  Index argmin = 0;
  friend bool operator==(const PrefixSumStats&, const PrefixSumStats&) = default;
};

struct StatsTrace {
  std::size_t rule_descents = 0;
  std::size_t predecessor_queries = 0;
};

// Per-rule prefix/suffix statistics over expansions of a grammar with integer
// terminals, supporting prefix-sum queries that walk one root-to-leaf path.
class RuleStats {
 public:
  RuleStats() = default;
  // Throws GrammarError if some nonterminal expands to the empty string.
  explicit RuleStats(const Slg& g);

  // Stats of the first p symbols of exp(x). Throws std::out_of_range unless 1 <= p <= |exp(x)|.
  PrefixSumStats prefix(NonterminalId x, Index p, StatsTrace* trace = nullptr) const;
  // Stats of the last p symbols of exp(x), positions counted from the start of that suffix.
  PrefixSumStats suffix(NonterminalId x, Index p, StatsTrace* trace = nullptr) const;
  // Smallest i in (b..e] minimizing B[1]+...+B[i], where B = exp(start).
  // Throws std::invalid_argument unless 0 <= b < e <= |B|.
  Index interval_argmin(Index b, Index e, StatsTrace* trace = nullptr) const;

  NonterminalId start() const { return start_; }
  Index expansion_length(NonterminalId x) const { return rules_.at(to_index(x)).plen[rules_.at(to_index(x)).plen.size()]; }

 private:
  struct Rule {
    Rhs rhs;
    // Over rhs[1..d), d in [1..l+1]. plen doubles as the child boundaries b_{i,d}.
    OneBased<Index> plen;
    OneBased<std::int64_t> psum;
    OneBased<std::optional<std::int64_t>> pmin;  // empty prefix has no minimum
    OneBased<Index> ppos;
    // Over rhs(d..l], d in [1..l].
    OneBased<Index> slen;
    OneBased<std::int64_t> ssum;
    OneBased<std::optional<std::int64_t>> smin;
    OneBased<Index> spos;
    // Minimum prefix sum of exp(N) inside child d, and where, relative to exp(N).
    SparseTableRmq mmin;
    OneBased<Index> mpos;
    SmallSetPredecessor bounds;
  };

  struct Step {
    const Rule* rule;
    Index d;
  };

  // Descends to the leaf at position p of exp(x); returns the path and the leaf value.
  std::int64_t descend(NonterminalId x, Index p, std::vector<Step>& path, StatsTrace* trace) const;
  PrefixSumStats symbol_prefix(const GrammarSymbol& s, Index p, StatsTrace* trace) const;
  PrefixSumStats symbol_suffix(const GrammarSymbol& s, Index p, StatsTrace* trace) const;

  std::vector<Rule> rules_;
  NonterminalId start_{};
};

}  // namespace cstq
