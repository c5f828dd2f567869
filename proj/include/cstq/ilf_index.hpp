#pragma once

#include <vector>

#include "cstq/predecessor.hpp"
#include "cstq/suffix_array.hpp"
#include "cstq/text.hpp"

namespace cstq {

// T' = (T[1]+1) ... (T[n]+1) 0, plus the ranks of T[1..] and T[n..] in SA(T).
struct TerminatedText {
  Text original;
  Text shifted;
  Index i_first = 0;  // ISA_T[1]
  Index i_last = 0;   // ISA_T[n]
};

// Throws std::overflow_error when sigma + 1 does not fit in a Symbol, and
// std::logic_error if the terminator added more than three BWT runs.
TerminatedText append_terminator(const Text& text);

// Maps symbols to their rank among the distinct symbols present.
Text remap_to_ranks(const Text& text);

struct IlfQueryCounters {
  std::size_t predecessor_queries = 0;
};

// Inverse LF in space proportional to the number of BWT runs: one sampled
// ILF value per run boundary, a predecessor lookup and an offset per query.
class IlfIndex {
 public:
  static IlfIndex build(const Text& text, PredecessorFlavor flavor = PredecessorFlavor::yfast);

  // ILF_T[i] for the original text. Throws std::out_of_range unless 1 <= i <= n.
  Index query(Index i, IlfQueryCounters* counters = nullptr) const;

  Index size() const { return n_; }
  Index boundary_count() const { return static_cast<Index>(keys_.size()); }
  // r of the terminated, rank-remapped text.
  Index terminated_runs() const { return terminated_runs_; }
  const std::vector<Key>& boundary_keys() const { return keys_; }
  PredecessorFlavor flavor() const { return pred_.flavor(); }

 private:
  Index n_ = 0;
  Index i_first_ = 0;
  Index i_last_ = 0;
  Index terminated_runs_ = 0;
  std::vector<Key> keys_;          // p_1 < ... < p_m, LF' of the run heads
  std::vector<Index> ilf_at_key_;  // ILF'[p_k]
  PredecessorIndex pred_;
};

}  // namespace cstq
