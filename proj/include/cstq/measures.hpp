#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

#include "cstq/suffix_array.hpp"
#include "cstq/text.hpp"

namespace cstq {

struct Run {
  Symbol symbol = 0;
  Index length = 0;
  friend bool operator==(const Run&, const Run&) = default;
};

struct RunLengthEncoding {
  std::vector<Run> runs;
  Index size() const { return static_cast<Index>(runs.size()); }
};

RunLengthEncoding run_length_encode(const Text& text);
Text run_length_decode(const RunLengthEncoding& rle, Symbol sigma);

// A phrase is either a literal symbol (source == 0, length 1) or a copy of
// `length` symbols starting at an earlier text position `source`.
struct Phrase {
  Index source = 0;
  Index length = 1;
  Symbol symbol = 0;

  static Phrase literal(Symbol c) { return {0, 1, c}; }
  static Phrase copy(Index source, Index length) { return {source, length, 0}; }
  bool is_literal() const { return source == 0; }
  friend bool operator==(const Phrase&, const Phrase&) = default;
};

struct LzFactorization {
  std::vector<Phrase> phrases;
  Index size() const { return static_cast<Index>(phrases.size()); }
};

class FactorizationError : public std::invalid_argument {
 public:
  FactorizationError(Index phrase_index, const std::string& msg)
      : std::invalid_argument("phrase " + std::to_string(phrase_index) + ": " + msg),
        phrase_index_(phrase_index) {}
  // 1-based; 0 when the problem is the total length.
  Index phrase_index() const { return phrase_index_; }

 private:
  Index phrase_index_;
};

// LPF[j]: length of the longest prefix of T[j..n] that also starts before j.
OneBased<Index> lpf_array(const Text& text);

// Greedy factorization. A phrase with LPF > 0 is always a copy, even of length 1,
// sourced from the lexicographically closest earlier suffix.
LzFactorization lz77_factorize(const Text& text);

// Returns the phrase count. Throws FactorizationError on the first bad phrase.
// Also throws std::logic_error if the greedy parse is somehow longer.
Index validate_lz_like(const Text& text, const LzFactorization& f);

// One literal plus one overlapping self-copy per run: at most 2|RL| phrases.
LzFactorization run_length_factorization(const Text& text);

// delta = numerator / denominator, attained first at length arg_len.
struct DeltaValue {
  Index numerator = 0;
  Index denominator = 1;
  Index arg_len = 0;

  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  // Compares the rational value only.
  friend std::strong_ordering operator<=>(const DeltaValue& a, const DeltaValue& b) {
    return static_cast<__int128>(a.numerator) * b.denominator <=>
           static_cast<__int128>(b.numerator) * a.denominator;
  }
  friend bool operator==(const DeltaValue& a, const DeltaValue& b) { return (a <=> b) == 0; }
};

// Distinct length-l substring counts d_1..d_n from the LCP array.
std::vector<Index> distinct_substring_counts(const OneBased<Index>& lcp);
DeltaValue substring_complexity(const Text& text);

Index bwt_run_count(const Text& text);

struct DeltaAppend {
  DeltaValue before;
  DeltaValue after;
};
// Throws std::logic_error if delta grows by more than one.
DeltaAppend delta_append_check(const Text& text, Symbol c);

struct MorphismImage {
  Text text;
  // Image of the greedy factorization of the source text, block by block.
  LzFactorization factorization;
};

// Replaces symbol c by blocks[c]. All blocks must share one length k >= 1.
MorphismImage morphism_expand(const Text& text, const std::vector<std::vector<Symbol>>& blocks,
                              Symbol target_sigma);

}  // namespace cstq
