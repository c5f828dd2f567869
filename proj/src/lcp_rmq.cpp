#include "cstq/lcp_rmq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cstq/suffix_array.hpp"

namespace cstq {

namespace {

std::vector<std::int64_t> differences(const OneBased<Index>& lcp) {
  std::vector<std::int64_t> a(static_cast<std::size_t>(lcp.size()));
  for (Index i = 1; i <= lcp.size(); ++i) a[static_cast<std::size_t>(i - 1)] = lcp[i] - (i > 1 ? lcp[i - 1] : 0);
  return a;
}

DiffLcpGrammar grammar_for(const std::vector<std::int64_t>& a, double epsilon) {
  if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  DiffLcpGrammar g;
  g.slp = build_pairing_slp(a);
  g.rounds = widening_rounds(static_cast<Index>(a.size()), epsilon);
  g.rhs_bound = Index{2} << g.rounds;
  g.grammar = widen(g.slp, g.rounds);

  const int bound = (g.slp.height() + g.rounds - 1) / g.rounds + 1;
  if (g.grammar.height() > bound) {
    throw std::logic_error("widened height " + std::to_string(g.grammar.height()) + " exceeds " +
                           std::to_string(bound));
  }
  for (std::uint32_t x = 0; x < g.grammar.nonterminal_count(); ++x) {
    if (static_cast<Index>(g.grammar.rhs(static_cast<NonterminalId>(x)).size()) > g.rhs_bound) {
      throw std::logic_error("widened rule longer than " + std::to_string(g.rhs_bound));
    }
  }
  g.stats = RuleStats(g.grammar);
  return g;
}

}  // namespace

std::vector<std::int64_t> diff_lcp_array(const Text& text) {
  require_nonempty(text, "diff_lcp_array");
  return differences(lcp_array(text, suffix_array(text)));
}

int widening_rounds(Index n, double epsilon) {
  if (n < 4) return 1;
  const double k = std::ceil(epsilon * std::log2(std::log2(static_cast<double>(n))));
  return std::max(1, static_cast<int>(k));
}

DiffLcpGrammar build_diff_lcp_slg(const Text& text, double epsilon) {
  return grammar_for(diff_lcp_array(text), epsilon);
}

LcpRmqIndex LcpRmqIndex::build(const Text& text, double epsilon) {
  require_nonempty(text, "LcpRmqIndex::build");
  const auto sa = suffix_array(text);
  const auto lcp = lcp_array(text, sa);

  LcpRmqIndex idx;
  idx.n_ = text.size();
  idx.g_ = grammar_for(differences(lcp), epsilon);
  idx.isa_ = inverse_permutation(sa);

  auto& rep = idx.report_;
  rep.n = idx.n_;
  std::vector<Symbol> bwt(static_cast<std::size_t>(idx.n_));
  for (Index i = 1; i <= idx.n_; ++i) bwt[static_cast<std::size_t>(i - 1)] = text[sa[i] == 1 ? idx.n_ : sa[i] - 1];
  rep.r = count_runs(bwt);
  rep.slp_size = idx.g_.slp.size();
  rep.slp_height = idx.g_.slp.height();
  rep.size = idx.g_.grammar.size();
  rep.height = idx.g_.grammar.height();
  rep.rounds = idx.g_.rounds;
  rep.rhs_bound = idx.g_.rhs_bound;
  for (std::uint32_t x = 0; x < idx.g_.grammar.nonterminal_count(); ++x) {
    rep.max_rhs = std::max<Index>(rep.max_rhs, static_cast<Index>(idx.g_.grammar.rhs(static_cast<NonterminalId>(x)).size()));
  }
  const double lg = std::log2(static_cast<double>(idx.n_));
  if (lg > 0) rep.size_over_r_log2n = static_cast<double>(rep.size) / (static_cast<double>(rep.r) * lg * lg);
  return idx;
}

Index LcpRmqIndex::lcp_rmq(Index b, Index e) const { return g_.stats.interval_argmin(b, e); }

Index LcpRmqIndex::lcp(Index i) const {
  return static_cast<Index>(g_.stats.prefix(g_.stats.start(), i).sum);
}

Index LcpRmqIndex::lce(Index i, Index j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw std::out_of_range("LCE positions (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") outside [1.." + std::to_string(n_) + "]");
  }
  if (i == j) return n_ - i + 1;
  Index b = isa_[i], e = isa_[j];
  if (b > e) std::swap(b, e);
  return lcp(lcp_rmq(b, e));
}

}  // namespace cstq
