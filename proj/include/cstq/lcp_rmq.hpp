#pragma once

#include <vector>

#include "cstq/slg.hpp"
#include "cstq/slg_stats.hpp"
#include "cstq/text.hpp"

namespace cstq {

// A[1] = LCP[1], A[i] = LCP[i] - LCP[i-1]; prefix sums give back LCP.
std::vector<std::int64_t> diff_lcp_array(const Text& text);

// k = ceil(epsilon * log2 log2 n) for n >= 4, else 1.
int widening_rounds(Index n, double epsilon);

struct DiffLcpGrammar {
  Slg slp;        // binary pairing grammar
  Slg grammar;    // widened
  RuleStats stats;
  int rounds = 1;
  Index rhs_bound = 4;  // 2 * 2^rounds
};

// Throws std::invalid_argument unless 0 < epsilon < 1 and the text is nonempty;
// std::logic_error if a widening invariant fails.
DiffLcpGrammar build_diff_lcp_slg(const Text& text, double epsilon = 0.5);

struct GrammarReport {
  Index n = 0;
  Index r = 0;
  Index slp_size = 0;
  int slp_height = 0;
  Index size = 0;
  int height = 0;
  int rounds = 0;
  Index rhs_bound = 0;
  Index max_rhs = 0;
  double size_over_r_log2n = 0;  // |G| / (r log^2 n); 0 when undefined
};

// LCP range-minimum and LCE queries over a grammar for the differential LCP array.
// ISA is kept as a plain array.
class LcpRmqIndex {
 public:
  static LcpRmqIndex build(const Text& text, double epsilon = 0.5);

  // Smallest i in (b..e] minimizing LCP[i]. Throws std::invalid_argument unless 0 <= b < e <= n.
  Index lcp_rmq(Index b, Index e) const;
  // Throws std::out_of_range unless both positions are in [1..n].
  Index lce(Index i, Index j) const;
  // LCP[i] read back from the grammar.
  Index lcp(Index i) const;

  Index size() const { return n_; }
  const DiffLcpGrammar& grammar() const { return g_; }
  const GrammarReport& report() const { return report_; }

 private:
  Index n_ = 0;
  DiffLcpGrammar g_;
  OneBased<Index> isa_;
  GrammarReport report_;
};

}  // namespace cstq
