#include "cstq/slg_stats.hpp"

#include <stdexcept>
#include <string>

namespace cstq {

namespace {

struct Whole {
  Index len;
  std::int64_t sum;
  std::int64_t min;
  Index pos;
};

void require_length(Index p, Index len, const char* what) {
  if (p < 1 || p > len) {
    throw std::out_of_range(std::string(what) + " length " + std::to_string(p) + " outside [1.." +
                            std::to_string(len) + "]");
  }
}

}  // namespace

RuleStats::RuleStats(const Slg& g) : start_(g.start()) {
  rules_.resize(g.nonterminal_count());
  std::vector<Whole> whole(g.nonterminal_count());
  auto info = [&](const GrammarSymbol& s) -> Whole {
    if (!s.is_nonterminal) return {1, s.value, s.value, 1};
    return whole[static_cast<std::size_t>(s.value)];
  };

  for (NonterminalId x : g.bottom_up_order()) {
    const Rhs& rhs = g.rhs(x);
    const auto l = static_cast<Index>(rhs.size());
    if (l == 0) throw GrammarError(x, "expands to the empty string");
    Rule& r = rules_[to_index(x)];
    r.rhs = rhs;

    r.plen = OneBased<Index>(l + 1, 0);
    r.psum = OneBased<std::int64_t>(l + 1, 0);
    r.pmin = OneBased<std::optional<std::int64_t>>(l + 1, std::nullopt);
    r.ppos = OneBased<Index>(l + 1, 0);
    r.mpos = OneBased<Index>(l, 0);
    std::vector<std::int64_t> mmin(static_cast<std::size_t>(l));
    for (Index d = 1; d <= l; ++d) {
      const Whole c = info(rhs[static_cast<std::size_t>(d - 1)]);
      mmin[static_cast<std::size_t>(d - 1)] = r.psum[d] + c.min;
      r.mpos[d] = r.plen[d] + c.pos;
      r.plen[d + 1] = r.plen[d] + c.len;
      r.psum[d + 1] = r.psum[d] + c.sum;
      if (!r.pmin[d] || mmin[static_cast<std::size_t>(d - 1)] < *r.pmin[d]) {
        r.pmin[d + 1] = mmin[static_cast<std::size_t>(d - 1)];
        r.ppos[d + 1] = r.mpos[d];
      } else {
        r.pmin[d + 1] = r.pmin[d];
        r.ppos[d + 1] = r.ppos[d];
      }
    }
    r.mmin = SparseTableRmq(std::move(mmin));
    r.bounds = SmallSetPredecessor(r.plen.values());

    r.slen = OneBased<Index>(l, 0);
    r.ssum = OneBased<std::int64_t>(l, 0);
    r.smin = OneBased<std::optional<std::int64_t>>(l, std::nullopt);
    r.spos = OneBased<Index>(l, 0);
    for (Index d = l - 1; d >= 1; --d) {
      const Whole c = info(rhs[static_cast<std::size_t>(d)]);  // child d+1
      r.slen[d] = c.len + r.slen[d + 1];
      r.ssum[d] = c.sum + r.ssum[d + 1];
      // The child comes first, so it wins ties.
      if (!r.smin[d + 1] || c.min <= c.sum + *r.smin[d + 1]) {
        r.smin[d] = c.min;
        r.spos[d] = c.pos;
      } else {
        r.smin[d] = c.sum + *r.smin[d + 1];
        r.spos[d] = c.len + r.spos[d + 1];
      }
    }

    whole[to_index(x)] = {r.plen[l + 1], r.psum[l + 1], *r.pmin[l + 1], r.ppos[l + 1]};
  }
}

std::int64_t RuleStats::descend(NonterminalId x, Index p, std::vector<Step>& path,
                                StatsTrace* trace) const {
  const Rule* cur = &rules_[to_index(x)];
  for (;;) {
    const Index d = cur->bounds.pred(p);
    if (trace) {
      ++trace->rule_descents;
      ++trace->predecessor_queries;
    }
    path.push_back({cur, d});
    p -= cur->plen[d];
    const GrammarSymbol& s = cur->rhs[static_cast<std::size_t>(d - 1)];
    if (!s.is_nonterminal) return s.value;
    cur = &rules_[static_cast<std::size_t>(s.value)];
  }
}

PrefixSumStats RuleStats::prefix(NonterminalId x, Index p, StatsTrace* trace) const {
  require_length(p, expansion_length(x), "prefix");
  std::vector<Step> path;
  const std::int64_t leaf = descend(x, p, path, trace);

  std::int64_t acc = 0;
  Index offset = 0;
  std::optional<std::int64_t> best;
  Index best_pos = 0;
  for (const auto& [rule, d] : path) {
    if (rule->pmin[d] && (!best || acc + *rule->pmin[d] < *best)) {
      best = acc + *rule->pmin[d];
      best_pos = offset + rule->ppos[d];
    }
    acc += rule->psum[d];
    offset += rule->plen[d];
  }
  const std::int64_t sum = acc + leaf;
  if (!best || sum < *best) {
    best = sum;
    best_pos = p;
  }
  return {sum, *best, best_pos};
}

PrefixSumStats RuleStats::suffix(NonterminalId x, Index p, StatsTrace* trace) const {
  const Index m = expansion_length(x);
  require_length(p, m, "suffix");
  std::vector<Step> path;
  const std::int64_t leaf = descend(x, m - p + 1, path, trace);

  // The suffix is the leaf followed by the right remainders of the path rules, deepest first.
  std::int64_t acc = leaf;
  Index offset = 1;
  std::int64_t best = leaf;
  Index best_pos = 1;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const auto& [rule, d] = *it;
    if (rule->smin[d] && acc + *rule->smin[d] < best) {
      best = acc + *rule->smin[d];
      best_pos = offset + rule->spos[d];
    }
    acc += rule->ssum[d];
    offset += rule->slen[d];
  }
  return {acc, best, best_pos};
}

PrefixSumStats RuleStats::symbol_prefix(const GrammarSymbol& s, Index p, StatsTrace* trace) const {
  if (s.is_nonterminal) return prefix(s.id(), p, trace);
  return {s.value, s.value, 1};
}

PrefixSumStats RuleStats::symbol_suffix(const GrammarSymbol& s, Index p, StatsTrace* trace) const {
  if (s.is_nonterminal) return suffix(s.id(), p, trace);
  return {s.value, s.value, 1};
}

Index RuleStats::interval_argmin(Index b, Index e, StatsTrace* trace) const {
  const Index n = expansion_length(start_);
  if (b < 0 || b >= e || e > n) {
    throw std::invalid_argument("interval (" + std::to_string(b) + ".." + std::to_string(e) +
                                "] is empty or outside [0.." + std::to_string(n) + "]");
  }
  // Narrow down to the deepest rule in which (b..e] spans more than one child.
  const Rule* r = &rules_[to_index(start_)];
  Index lo = b, hi = e;
  Index i = 0, j = 0;
  for (;;) {
    i = r->bounds.pred(lo);
    j = r->bounds.pred(hi + 1);
    if (trace) {
      ++trace->rule_descents;
      trace->predecessor_queries += 2;
    }
    if (i != j) break;
    // Both ends inside child i, which therefore spans at least two symbols.
    const GrammarSymbol& child = r->rhs[static_cast<std::size_t>(i - 1)];
    if (!child.is_nonterminal) throw std::logic_error("interval collapsed onto a terminal");
    lo -= r->plen[i];
    hi -= r->plen[i];
    r = &rules_[static_cast<std::size_t>(child.value)];
  }

  const Index left = r->plen[i + 1] - lo;
  const Index middle = r->plen[j] - r->plen[i + 1];
  const Index right = hi - r->plen[j];

  std::optional<std::int64_t> best;
  Index best_pos = 0;
  std::int64_t sum = 0;
  Index covered = 0;
  if (left > 0) {
    const auto st = symbol_suffix(r->rhs[static_cast<std::size_t>(i - 1)], left, trace);
    best = st.min;
    best_pos = st.argmin;
    sum = st.sum;
    covered = left;
  }
  if (middle > 0) {
    const Index t = r->mmin.argmin(i, j - 1);
    const std::int64_t v = sum + r->mmin.value(t) - r->psum[i + 1];
    if (!best || v < *best) {
      best = v;
      best_pos = covered + r->mpos[t] - r->plen[i + 1];
    }
    sum += r->psum[j] - r->psum[i + 1];
    covered += middle;
  }
  if (right > 0) {
    const auto st = symbol_prefix(r->rhs[static_cast<std::size_t>(j - 1)], right, trace);
    if (!best || sum + st.min < *best) {
      best = sum + st.min;
      best_pos = covered + st.argmin;
    }
  }
  return b + best_pos;
}

}  // namespace cstq
