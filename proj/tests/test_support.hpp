#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "cstq/text.hpp"

namespace testing_support {

inline const char* const kSampleText = "bbabaababababaababa";

inline cstq::Text sample_text() { return cstq::Text::from_alphabet(kSampleText, "ab"); }

inline std::vector<cstq::Index> ints(std::initializer_list<cstq::Index> v) { return v; }

inline cstq::Text random_text(std::mt19937_64& rng, cstq::Index n, cstq::Symbol sigma) {
  std::vector<cstq::Symbol> s(static_cast<std::size_t>(n));
  for (auto& c : s) c = static_cast<cstq::Symbol>(rng() % sigma);
  return cstq::Text(std::move(s), sigma);
}

// Suffix j of the text as a plain vector (1-based j).
inline std::vector<cstq::Symbol> suffix(const cstq::Text& t, cstq::Index j) {
  return {t.symbols().begin() + (j - 1), t.symbols().end()};
}

// Suffix array by sorting whole suffixes with std::lexicographical_compare.
inline std::vector<cstq::Index> brute_sa(const cstq::Text& t) {
  std::vector<cstq::Index> sa(static_cast<std::size_t>(t.size()));
  for (cstq::Index i = 0; i < t.size(); ++i) sa[static_cast<std::size_t>(i)] = i + 1;
  std::sort(sa.begin(), sa.end(), [&](cstq::Index a, cstq::Index b) { return suffix(t, a) < suffix(t, b); });
  return sa;
}

inline cstq::Index brute_lce(const cstq::Text& t, cstq::Index i, cstq::Index j) {
  cstq::Index l = 0;
  while (i + l <= t.size() && j + l <= t.size() && t[i + l] == t[j + l]) ++l;
  return l;
}

}  // namespace testing_support
