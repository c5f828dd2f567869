#include "cstq/measures.hpp"

#include <numeric>

#include "cstq/sparse_rmq.hpp"

namespace cstq {

namespace {

struct PreviousFactor {
  OneBased<Index> length;
  OneBased<Index> source;  // 0 where length is 0
};

// For each suffix, the nearest earlier-starting suffixes on either side in
// suffix-array order bound the longest previous factor.
PreviousFactor previous_factors(const Text& text) {
  const Index n = text.size();
  const auto sa = suffix_array(text);
  const auto lcp = lcp_array(text, sa);
  const SparseTableRmq rmq(std::vector<std::int64_t>(lcp.begin(), lcp.end()));
  auto lcp_between = [&](Index r1, Index r2) { return rmq.value(rmq.argmin(r1, r2)); };

  OneBased<Index> psv(n, 0), nsv(n, 0);
  std::vector<Index> stack;
  for (Index r = 1; r <= n; ++r) {
    while (!stack.empty() && sa[stack.back()] > sa[r]) {
      nsv[stack.back()] = r;
      stack.pop_back();
    }
    psv[r] = stack.empty() ? 0 : stack.back();
    stack.push_back(r);
  }

  PreviousFactor out{OneBased<Index>(n, 0), OneBased<Index>(n, 0)};
  for (Index r = 1; r <= n; ++r) {
    Index best = 0, src = 0;
    if (psv[r] != 0) {
      best = lcp_between(psv[r], r);
      src = sa[psv[r]];
    }
    if (nsv[r] != 0) {
      const Index l = lcp_between(r, nsv[r]);
      if (l > best) {
        best = l;
        src = sa[nsv[r]];
      }
    }
    out.length[sa[r]] = best;
    out.source[sa[r]] = best > 0 ? src : 0;
  }
  return out;
}

}  // namespace

RunLengthEncoding run_length_encode(const Text& text) {
  require_nonempty(text, "run_length_encode");
  RunLengthEncoding rle;
  for (Symbol c : text.symbols()) {
    if (!rle.runs.empty() && rle.runs.back().symbol == c) {
      ++rle.runs.back().length;
    } else {
      rle.runs.push_back({c, 1});
    }
  }
  return rle;
}

Text run_length_decode(const RunLengthEncoding& rle, Symbol sigma) {
  std::vector<Symbol> out;
  for (const Run& run : rle.runs) out.insert(out.end(), static_cast<std::size_t>(run.length), run.symbol);
  return Text(std::move(out), sigma);
}

OneBased<Index> lpf_array(const Text& text) {
  require_nonempty(text, "lpf_array");
  return previous_factors(text).length;
}

LzFactorization lz77_factorize(const Text& text) {
  require_nonempty(text, "lz77_factorize");
  const auto pf = previous_factors(text);
  LzFactorization f;
  for (Index j = 1; j <= text.size();) {
    if (pf.length[j] == 0) {
      f.phrases.push_back(Phrase::literal(text[j]));
      ++j;
    } else {
      f.phrases.push_back(Phrase::copy(pf.source[j], pf.length[j]));
      j += pf.length[j];
    }
  }
  return f;
}

Index validate_lz_like(const Text& text, const LzFactorization& f) {
  const Index n = text.size();
  Index start = 1;
  for (Index k = 1; k <= f.size(); ++k) {
    const Phrase& ph = f.phrases[static_cast<std::size_t>(k - 1)];
    if (ph.length < 1) throw FactorizationError(k, "non-positive length");
    if (start + ph.length - 1 > n) throw FactorizationError(k, "runs past the end of the text");
    if (ph.is_literal()) {
      if (ph.length != 1) throw FactorizationError(k, "literal longer than one symbol");
      if (text[start] != ph.symbol) throw FactorizationError(k, "literal symbol mismatch");
    } else {
      if (ph.source < 1 || ph.source >= start) {
        throw FactorizationError(k, "source " + std::to_string(ph.source) +
                                        " does not precede phrase start " + std::to_string(start));
      }
      for (Index t = 0; t < ph.length; ++t) {
        if (text[ph.source + t] != text[start + t]) {
          throw FactorizationError(k, "copy mismatch at offset " + std::to_string(t));
        }
      }
    }
    start += ph.length;
  }
  if (start != n + 1) {
    throw FactorizationError(0, "phrases cover " + std::to_string(start - 1) + " of " +
                                    std::to_string(n) + " symbols");
  }
  if (n > 0 && lz77_factorize(text).size() > f.size()) {
    throw std::logic_error("greedy factorization larger than a valid LZ77-like factorization");
  }
  return f.size();
}

LzFactorization run_length_factorization(const Text& text) {
  LzFactorization f;
  Index start = 1;
  for (const Run& run : run_length_encode(text).runs) {
    f.phrases.push_back(Phrase::literal(run.symbol));
    if (run.length > 1) f.phrases.push_back(Phrase::copy(start, run.length - 1));
    start += run.length;
  }
  return f;
}

std::vector<Index> distinct_substring_counts(const OneBased<Index>& lcp) {
  const Index n = lcp.size();
  // at_least[l] = #{i in [2..n] : lcp[i] >= l}
  std::vector<Index> at_least(static_cast<std::size_t>(n + 2), 0);
  for (Index i = 2; i <= n; ++i) ++at_least[static_cast<std::size_t>(lcp[i])];
  for (Index l = n; l-- > 0;) at_least[static_cast<std::size_t>(l)] += at_least[static_cast<std::size_t>(l + 1)];
  std::vector<Index> d(static_cast<std::size_t>(n));
  for (Index l = 1; l <= n; ++l) d[static_cast<std::size_t>(l - 1)] = (n - l + 1) - at_least[static_cast<std::size_t>(l)];
  return d;
}

DeltaValue substring_complexity(const Text& text) {
  require_nonempty(text, "substring_complexity");
  const auto d = distinct_substring_counts(lcp_array(text, suffix_array(text)));
  DeltaValue best{d[0], 1, 1};
  for (std::size_t i = 1; i < d.size(); ++i) {
    const DeltaValue cand{d[i], static_cast<Index>(i + 1), static_cast<Index>(i + 1)};
    if (cand > best) best = cand;
  }
  const Index g = std::gcd(best.numerator, best.denominator);
  best.numerator /= g;
  best.denominator /= g;
  return best;
}

Index bwt_run_count(const Text& text) {
  const auto b = build_bundle(text);
  return count_runs(b.bwt.values());
}

DeltaAppend delta_append_check(const Text& text, Symbol c) {
  DeltaAppend out{substring_complexity(text), substring_complexity(text.appended(c))};
  const DeltaValue bound{out.before.numerator + out.before.denominator, out.before.denominator, 0};
  if (out.after > bound) throw std::logic_error("delta grew by more than one after appending a symbol");
  return out;
}

MorphismImage morphism_expand(const Text& text, const std::vector<std::vector<Symbol>>& blocks,
                              Symbol target_sigma) {
  require_nonempty(text, "morphism_expand");
  if (blocks.size() < text.sigma()) throw std::invalid_argument("morphism has fewer blocks than sigma");
  const std::size_t k = blocks.front().size();
  if (k == 0) throw std::invalid_argument("morphism blocks must be nonempty");
  for (std::size_t c = 0; c < blocks.size(); ++c) {
    if (blocks[c].size() != k) {
      throw std::invalid_argument("morphism block for symbol " + std::to_string(c) + " has length " +
                                  std::to_string(blocks[c].size()) + ", expected " + std::to_string(k));
    }
  }

  std::vector<Symbol> out;
  out.reserve(k * static_cast<std::size_t>(text.size()));
  for (Symbol c : text.symbols()) out.insert(out.end(), blocks[c].begin(), blocks[c].end());

  const auto width = static_cast<Index>(k);
  LzFactorization image;
  for (const Phrase& ph : lz77_factorize(text).phrases) {
    if (ph.is_literal()) {
      for (Symbol s : blocks[ph.symbol]) image.phrases.push_back(Phrase::literal(s));
    } else {
      image.phrases.push_back(Phrase::copy(width * (ph.source - 1) + 1, width * ph.length));
    }
  }
  return {Text(std::move(out), target_sigma), std::move(image)};
}

}  // namespace cstq
