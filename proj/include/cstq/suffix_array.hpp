#pragma once

#include "cstq/text.hpp"

namespace cstq {

// Prefix doubling with radix sorting; no sentinel is appended.
OneBased<Index> suffix_array(const Text& text);
// Comparison sort of whole suffixes. Quadratic-ish, for cross-checking only.
OneBased<Index> suffix_array_naive(const Text& text);

OneBased<Index> inverse_permutation(const OneBased<Index>& perm);
// Kasai et al.; lcp[1] = 0.
OneBased<Index> lcp_array(const Text& text, const OneBased<Index>& sa);

struct SuffixArrayBundle {
  OneBased<Index> sa;
  OneBased<Index> isa;
  OneBased<Index> lcp;
  OneBased<Index> plcp;
  OneBased<Symbol> bwt;
  OneBased<Index> lf;
  OneBased<Index> ilf;
  OneBased<Index> phi;
  OneBased<Index> inv_phi;
};

SuffixArrayBundle build_bundle(const Text& text);

// Suffixes in (range_beg..range_end] of the suffix array start with the pattern.
struct PatternRange {
  Index range_beg = 0;
  Index range_end = 0;

  Index count() const { return range_end - range_beg; }
  friend bool operator==(const PatternRange&, const PatternRange&) = default;
};

PatternRange pattern_range(const Text& text, const OneBased<Index>& sa, const Text& pattern);
PatternRange pattern_range(const Text& text, const OneBased<Index>& sa,
                           std::span<const Symbol> pattern);

// Number of suffixes lexicographically smaller than the pattern, counted by
// comparing every suffix directly. Independent of any suffix array.
Index range_beg_by_scan(const Text& text, std::span<const Symbol> pattern);

Index lce_naive(const Text& text, Index i, Index j);

// Number of equal-symbol runs in a sequence.
Index count_runs(std::span<const Symbol> symbols);

}  // namespace cstq
