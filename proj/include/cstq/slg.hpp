#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cstq/text.hpp"

namespace cstq {

enum class NonterminalId : std::uint32_t {};

inline std::uint32_t to_index(NonterminalId x) { return static_cast<std::uint32_t>(x); }
inline std::string to_string(NonterminalId x) { return "N" + std::to_string(to_index(x)); }

struct GrammarSymbol {
  bool is_nonterminal = false;
  std::int64_t value = 0;  // terminal value or nonterminal number

  static GrammarSymbol terminal(std::int64_t v) { return {false, v}; }
  static GrammarSymbol nonterminal(NonterminalId x) { return {true, to_index(x)}; }
  NonterminalId id() const { return static_cast<NonterminalId>(value); }
  friend bool operator==(const GrammarSymbol&, const GrammarSymbol&) = default;
};

using Rhs = std::vector<GrammarSymbol>;

struct Production {
  NonterminalId lhs;
  Rhs rhs;
};

class GrammarError : public std::invalid_argument {
 public:
  GrammarError(NonterminalId x, const std::string& msg)
      : std::invalid_argument(to_string(x) + ": " + msg), nonterminal_(x) {}
  NonterminalId nonterminal() const { return nonterminal_; }

 private:
  NonterminalId nonterminal_;
};

// Straight-line grammar over integer terminals. Nonterminals are numbered
// 0..k-1 and each must have exactly one production.
class Slg {
 public:
  Slg() = default;
  // Throws GrammarError naming a nonterminal that is undefined, defined twice,
  // or part of a cycle.
  Slg(std::vector<Production> productions, NonterminalId start);

  std::size_t nonterminal_count() const { return rules_.size(); }
  NonterminalId start() const { return start_; }
  const Rhs& rhs(NonterminalId x) const { return rules_.at(to_index(x)); }
  Index expansion_length(NonterminalId x) const { return lengths_.at(to_index(x)); }
  int height(NonterminalId x) const { return heights_.at(to_index(x)); }
  int height() const { return height(start_); }
  // Sum over nonterminals of max(|rhs|, 1).
  Index size() const;
  // Every nonterminal appears after the ones its rule mentions.
  const std::vector<NonterminalId>& bottom_up_order() const { return order_; }

 private:
  std::vector<Rhs> rules_;
  NonterminalId start_{};
  std::vector<Index> lengths_;
  std::vector<int> heights_;
  std::vector<NonterminalId> order_;
};

std::vector<std::int64_t> expand(const Slg& g, NonterminalId x);

struct SlgSummary {
  Index size = 0;
  int height = 0;
};
SlgSummary validate_slg(const Slg& g);

// Binary grammar for `values`: one rule X_c -> c per distinct value, then rounds
// that pair up adjacent symbols (an odd last symbol is carried up unchanged),
// reusing a nonterminal for a pair seen before. Height is O(log n).
Slg build_pairing_slp(std::span<const std::int64_t> values);

// Replaces every rule by its right-hand side with all nonterminals expanded
// `rounds` times. Rules of a binary grammar end up with at most 2^(rounds+1) symbols.
Slg widen(const Slg& g, int rounds);

}  // namespace cstq
