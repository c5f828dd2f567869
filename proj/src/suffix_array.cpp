#include "cstq/suffix_array.hpp"

#include <algorithm>
#include <numeric>

namespace cstq {

namespace {

// <0: suffix precedes pattern, 0: pattern is a prefix of the suffix, >0: suffix follows.
int compare_suffix(std::span<const Symbol> t, std::size_t start, std::span<const Symbol> p) {
  for (std::size_t k = 0;; ++k) {
    if (k == p.size()) return 0;
    if (start + k == t.size()) return -1;
    if (t[start + k] != p[k]) return t[start + k] < p[k] ? -1 : 1;
  }
}

}  // namespace

OneBased<Index> suffix_array(const Text& text) {
  require_nonempty(text, "suffix_array");
  const auto t = text.symbols();
  const std::size_t n = t.size();

  std::vector<std::size_t> sa(n), tmp(n), rank(n), next_rank(n);
  std::iota(sa.begin(), sa.end(), 0);
  std::stable_sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) { return t[a] < t[b]; });
  rank[sa[0]] = 1;
  for (std::size_t i = 1; i < n; ++i) rank[sa[i]] = rank[sa[i - 1]] + (t[sa[i]] != t[sa[i - 1]]);

  std::vector<std::size_t> count(n + 1);
  for (std::size_t k = 1; rank[sa[n - 1]] < n; k <<= 1) {
    // Order by second key: suffixes shorter than k+1 have an empty second half and go first.
    std::size_t p = 0;
    for (std::size_t i = n - std::min(k, n); i < n; ++i) tmp[p++] = i;
    for (std::size_t i = 0; i < n; ++i) {
      if (sa[i] >= k) tmp[p++] = sa[i] - k;
    }
    // Stable counting sort by first key.
    std::fill(count.begin(), count.end(), 0);
    for (std::size_t i = 0; i < n; ++i) ++count[rank[i]];
    for (std::size_t r = 1; r <= n; ++r) count[r] += count[r - 1];
    for (std::size_t i = n; i-- > 0;) sa[--count[rank[tmp[i]]]] = tmp[i];

    auto second = [&](std::size_t i) { return i + k < n ? rank[i + k] : 0; };
    next_rank[sa[0]] = 1;
    for (std::size_t i = 1; i < n; ++i) {
      const bool same = rank[sa[i]] == rank[sa[i - 1]] && second(sa[i]) == second(sa[i - 1]);
      next_rank[sa[i]] = next_rank[sa[i - 1]] + (same ? 0 : 1);
    }
    rank.swap(next_rank);
  }

  std::vector<Index> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Index>(sa[i]) + 1;
  return OneBased<Index>(std::move(out));
}

OneBased<Index> suffix_array_naive(const Text& text) {
  require_nonempty(text, "suffix_array_naive");
  const auto t = text.symbols();
  std::vector<Index> sa(t.size());
  std::iota(sa.begin(), sa.end(), 1);
  std::sort(sa.begin(), sa.end(), [&](Index a, Index b) {
    return std::lexicographical_compare(t.begin() + (a - 1), t.end(), t.begin() + (b - 1), t.end());
  });
  return OneBased<Index>(std::move(sa));
}

OneBased<Index> inverse_permutation(const OneBased<Index>& perm) {
  OneBased<Index> inv(perm.size(), 0);
  for (Index i = 1; i <= perm.size(); ++i) inv[perm[i]] = i;
  return inv;
}

OneBased<Index> lcp_array(const Text& text, const OneBased<Index>& sa) {
  const Index n = text.size();
  const OneBased<Index> isa = inverse_permutation(sa);
  OneBased<Index> lcp(n, 0);
  Index h = 0;
  for (Index j = 1; j <= n; ++j) {
    const Index r = isa[j];
    if (r == 1) {
      h = 0;
      continue;
    }
    const Index prev = sa[r - 1];
    while (j + h <= n && prev + h <= n && text[j + h] == text[prev + h]) ++h;
    lcp[r] = h;
    if (h > 0) --h;
  }
  return lcp;
}

SuffixArrayBundle build_bundle(const Text& text) {
  require_nonempty(text, "build_bundle");
  const Index n = text.size();
  SuffixArrayBundle b;
  b.sa = suffix_array(text);
  b.isa = inverse_permutation(b.sa);
  b.lcp = lcp_array(text, b.sa);

  b.plcp = OneBased<Index>(n, 0);
  b.bwt = OneBased<Symbol>(n, 0);
  b.lf = OneBased<Index>(n, 0);
  b.phi = OneBased<Index>(n, 0);
  for (Index i = 1; i <= n; ++i) {
    const Index s = b.sa[i];
    b.plcp[s] = b.lcp[i];
    b.bwt[i] = s == 1 ? text[n] : text[s - 1];
    b.lf[i] = s == 1 ? b.isa[n] : b.isa[s - 1];
    b.phi[s] = i == 1 ? b.sa[n] : b.sa[i - 1];
  }
  b.ilf = inverse_permutation(b.lf);
  b.inv_phi = inverse_permutation(b.phi);
  return b;
}

PatternRange pattern_range(const Text& text, const OneBased<Index>& sa,
                           std::span<const Symbol> pattern) {
  const auto t = text.symbols();
  const auto& ranks = sa.values();
  auto cmp = [&](Index s) { return compare_suffix(t, static_cast<std::size_t>(s - 1), pattern); };
  auto lo = std::partition_point(ranks.begin(), ranks.end(), [&](Index s) { return cmp(s) < 0; });
  auto hi = std::partition_point(lo, ranks.end(), [&](Index s) { return cmp(s) == 0; });
  return {static_cast<Index>(lo - ranks.begin()), static_cast<Index>(hi - ranks.begin())};
}

PatternRange pattern_range(const Text& text, const OneBased<Index>& sa, const Text& pattern) {
  return pattern_range(text, sa, pattern.symbols());
}

Index range_beg_by_scan(const Text& text, std::span<const Symbol> pattern) {
  const auto t = text.symbols();
  Index below = 0;
  for (std::size_t s = 0; s < t.size(); ++s) below += compare_suffix(t, s, pattern) < 0;
  return below;
}

Index lce_naive(const Text& text, Index i, Index j) {
  const Index n = text.size();
  if (i < 1 || i > n || j < 1 || j > n) {
    throw std::out_of_range("LCE positions (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") outside [1.." + std::to_string(n) + "]");
  }
  Index l = 0;
  while (i + l <= n && j + l <= n && text[i + l] == text[j + l]) ++l;
  return l;
}

Index count_runs(std::span<const Symbol> symbols) {
  Index runs = 0;
  for (std::size_t i = 0; i < symbols.size(); ++i) runs += i == 0 || symbols[i] != symbols[i - 1];
  return runs;
}

}  // namespace cstq
