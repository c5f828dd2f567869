#include "cstq/slg.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

namespace cstq {

Slg::Slg(std::vector<Production> productions, NonterminalId start) : start_(start) {
  std::size_t k = 0;
  for (const auto& p : productions) k = std::max<std::size_t>(k, to_index(p.lhs) + 1);
  std::vector<std::optional<Rhs>> defined(k);
  for (auto& p : productions) {
    auto& slot = defined[to_index(p.lhs)];
    if (slot) throw GrammarError(p.lhs, "defined more than once");
    slot = std::move(p.rhs);
  }
  if (to_index(start) >= k) throw GrammarError(start, "start symbol has no production");
  for (std::size_t x = 0; x < k; ++x) {
    if (!defined[x]) throw GrammarError(static_cast<NonterminalId>(x), "no production");
    for (const auto& s : *defined[x]) {
      if (s.is_nonterminal && (s.value < 0 || static_cast<std::size_t>(s.value) >= k || !defined[static_cast<std::size_t>(s.value)])) {
        throw GrammarError(s.id(), "referenced by " + to_string(static_cast<NonterminalId>(x)) +
                                       " but has no production");
      }
    }
    rules_.push_back(std::move(*defined[x]));
  }

  // Iterative DFS; state 1 = on the stack, 2 = finished.
  std::vector<int> state(k, 0);
  lengths_.assign(k, 0);
  heights_.assign(k, 0);
  for (std::size_t root = 0; root < k; ++root) {
    if (state[root]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [x, next] = stack.back();
      const Rhs& rhs = rules_[x];
      if (next < rhs.size()) {
        const GrammarSymbol s = rhs[next++];
        if (!s.is_nonterminal) continue;
        const auto y = static_cast<std::size_t>(s.value);
        if (state[y] == 1) throw GrammarError(s.id(), "lies on a cycle");
        if (state[y] == 0) {
          state[y] = 1;
          stack.emplace_back(y, 0);
        }
        continue;
      }
      Index len = 0;
      int h = 0;
      for (const auto& s : rhs) {
        const Index add = s.is_nonterminal ? lengths_[static_cast<std::size_t>(s.value)] : 1;
        if (__builtin_add_overflow(len, add, &len)) {
          throw GrammarError(static_cast<NonterminalId>(x), "expansion length overflows");
        }
        h = std::max(h, s.is_nonterminal ? heights_[static_cast<std::size_t>(s.value)] : 0);
      }
      lengths_[x] = len;
      heights_[x] = h + 1;
      state[x] = 2;
      order_.push_back(static_cast<NonterminalId>(x));
      stack.pop_back();
    }
  }
}

Index Slg::size() const {
  Index total = 0;
  for (const auto& r : rules_) total += std::max<Index>(static_cast<Index>(r.size()), 1);
  return total;
}

std::vector<std::int64_t> expand(const Slg& g, NonterminalId x) {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(g.expansion_length(x)));
  std::vector<std::pair<const Rhs*, std::size_t>> stack{{&g.rhs(x), 0}};
  while (!stack.empty()) {
    auto& [rhs, next] = stack.back();
    if (next == rhs->size()) {
      stack.pop_back();
      continue;
    }
    const GrammarSymbol s = (*rhs)[next++];
    if (s.is_nonterminal) {
      stack.emplace_back(&g.rhs(s.id()), 0);
    } else {
      out.push_back(s.value);
    }
  }
  return out;
}

SlgSummary validate_slg(const Slg& g) {
  // Rebuilding re-runs every structural check.
  std::vector<Production> productions;
  for (std::uint32_t x = 0; x < g.nonterminal_count(); ++x) {
    productions.push_back({static_cast<NonterminalId>(x), g.rhs(static_cast<NonterminalId>(x))});
  }
  const Slg copy(std::move(productions), g.start());
  return {copy.size(), copy.height()};
}

Slg build_pairing_slp(std::span<const std::int64_t> values) {
  if (values.empty()) throw std::invalid_argument("cannot build a grammar for an empty sequence");
  std::vector<Production> rules;
  auto fresh = [&](Rhs rhs) {
    const auto id = static_cast<NonterminalId>(rules.size());
    rules.push_back({id, std::move(rhs)});
    return to_index(id);
  };

  std::unordered_map<std::int64_t, std::uint32_t> leaf;
  std::vector<std::uint32_t> seq;
  seq.reserve(values.size());
  for (std::int64_t v : values) {
    auto it = leaf.find(v);
    if (it == leaf.end()) it = leaf.emplace(v, fresh({GrammarSymbol::terminal(v)})).first;
    seq.push_back(it->second);
  }

  std::unordered_map<std::uint64_t, std::uint32_t> pairs;
  while (seq.size() > 1) {
    std::vector<std::uint32_t> next;
    next.reserve((seq.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < seq.size(); i += 2) {
      const std::uint64_t key = (static_cast<std::uint64_t>(seq[i]) << 32) | seq[i + 1];
      auto it = pairs.find(key);
      if (it == pairs.end()) {
        it = pairs.emplace(key, fresh({GrammarSymbol::nonterminal(static_cast<NonterminalId>(seq[i])),
                                       GrammarSymbol::nonterminal(static_cast<NonterminalId>(seq[i + 1]))}))
                 .first;
      }
      next.push_back(it->second);
    }
    if (seq.size() % 2) next.push_back(seq.back());
    seq.swap(next);
  }
  return Slg(std::move(rules), static_cast<NonterminalId>(seq.front()));
}

Slg widen(const Slg& g, int rounds) {
  if (rounds < 1) throw std::invalid_argument("widening needs at least one round");
  std::vector<Production> rules;
  rules.reserve(g.nonterminal_count());
  for (std::uint32_t x = 0; x < g.nonterminal_count(); ++x) {
    Rhs cur = g.rhs(static_cast<NonterminalId>(x));
    for (int r = 0; r < rounds; ++r) {
      Rhs next;
      for (const auto& s : cur) {
        if (s.is_nonterminal) {
          const Rhs& sub = g.rhs(s.id());
          next.insert(next.end(), sub.begin(), sub.end());
        } else {
          next.push_back(s);
        }
      }
      cur.swap(next);
    }
    rules.push_back({static_cast<NonterminalId>(x), std::move(cur)});
  }
  return Slg(std::move(rules), g.start());
}

}  // namespace cstq
