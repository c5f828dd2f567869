#include "cstq/ilf_index.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "cstq/measures.hpp"

namespace cstq {

namespace {

struct Terminated {
  TerminatedText text;
  SuffixArrayBundle bundle;  // of the shifted text
};

Terminated terminate_and_index(const Text& text) {
  require_nonempty(text, "append_terminator");
  if (text.sigma() == std::numeric_limits<Symbol>::max()) {
    throw std::overflow_error("alphabet too wide to shift by one");
  }
  std::vector<Symbol> shifted;
  shifted.reserve(static_cast<std::size_t>(text.size()) + 1);
  for (Symbol c : text.symbols()) shifted.push_back(c + 1);
  shifted.push_back(0);

  Terminated out;
  out.text.original = text;
  out.text.shifted = Text(std::move(shifted), text.sigma() + 1);
  out.bundle = build_bundle(out.text.shifted);
  // SA(T') is n+1 followed by SA(T), so ranks shift by one.
  out.text.i_first = out.bundle.isa[1] - 1;
  out.text.i_last = out.bundle.isa[text.size()] - 1;

  const Index r_before = bwt_run_count(text);
  const Index r_after = count_runs(out.bundle.bwt.values());
  if (r_after > r_before + 3) {
    throw std::logic_error("terminator added " + std::to_string(r_after - r_before) + " BWT runs");
  }
  return out;
}

}  // namespace

TerminatedText append_terminator(const Text& text) { return terminate_and_index(text).text; }

Text remap_to_ranks(const Text& text) {
  std::vector<Symbol> present(text.symbols().begin(), text.symbols().end());
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());
  std::vector<Symbol> out;
  out.reserve(present.size());
  for (Symbol c : text.symbols()) {
    out.push_back(static_cast<Symbol>(std::lower_bound(present.begin(), present.end(), c) - present.begin()));
  }
  return Text(std::move(out), std::max<Symbol>(1, static_cast<Symbol>(present.size())));
}

IlfIndex IlfIndex::build(const Text& text, PredecessorFlavor flavor) {
  const Terminated t = terminate_and_index(remap_to_ranks(text));
  const auto& b = t.bundle;
  const Index n1 = b.sa.size();

  IlfIndex idx;
  idx.n_ = text.size();
  idx.i_first_ = t.text.i_first;
  idx.i_last_ = t.text.i_last;
  idx.terminated_runs_ = count_runs(b.bwt.values());

  for (Index i = 1; i <= n1; ++i) {
    if (i == 1 || b.bwt[i] != b.bwt[i - 1]) idx.keys_.push_back(b.lf[i]);
  }
  std::sort(idx.keys_.begin(), idx.keys_.end());
  idx.ilf_at_key_.reserve(idx.keys_.size());
  for (Key p : idx.keys_) idx.ilf_at_key_.push_back(b.ilf[p]);
  idx.pred_ = PredecessorIndex(StaticKeySet(idx.keys_, n1), flavor);
  return idx;
}

Index IlfIndex::query(Index i, IlfQueryCounters* counters) const {
  if (i < 1 || i > n_) {
    throw std::out_of_range("ILF query " + std::to_string(i) + " outside [1.." + std::to_string(n_) + "]");
  }
  if (i == i_last_) return i_first_;
  // Work in T', where the original rank i is rank i+1.
  const Index j = i + 1;
  const auto m = static_cast<Index>(keys_.size());
  Index k = pred_.pred(j);
  if (counters) ++counters->predecessor_queries;
  if (k + 1 <= m && keys_[static_cast<std::size_t>(k)] == j) ++k;
  const auto slot = static_cast<std::size_t>(k - 1);
  return ilf_at_key_[slot] + (j - keys_[slot]) - 1;
}

}  // namespace cstq
