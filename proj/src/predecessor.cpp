#include "cstq/predecessor.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace cstq {

namespace {

Index count_below(const std::vector<Key>& keys, Key x) {
  return static_cast<Index>(std::lower_bound(keys.begin(), keys.end(), x) - keys.begin());
}

}  // namespace

StaticKeySet::StaticKeySet(std::vector<Key> keys, Key universe)
    : keys_(std::move(keys)), universe_(universe) {
  if (universe_ < 0) throw std::invalid_argument("negative universe bound");
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (keys_[i] < 0 || keys_[i] > universe_) {
      throw std::invalid_argument("key " + std::to_string(keys_[i]) + " outside [0.." +
                                  std::to_string(universe_) + "]");
    }
    if (i > 0 && keys_[i] <= keys_[i - 1]) {
      throw std::invalid_argument("keys not strictly increasing at position " + std::to_string(i + 1));
    }
  }
}

Index pred(const StaticKeySet& set, Key x) { return count_below(set.keys(), x); }

int pred_color(const StaticKeySet& set, Key x) { return static_cast<int>(pred(set, x) % 2); }

YFastTrie::YFastTrie(std::vector<Key> keys, Key universe) {
  StaticKeySet checked(std::move(keys), universe);
  keys_ = checked.keys();
  width_ = std::max(1, static_cast<int>(std::bit_width(static_cast<std::uint64_t>(universe))));
  const auto bucket = static_cast<std::size_t>(width_);
  for (std::size_t i = 0; i < keys_.size(); i += bucket) bucket_start_.push_back(i);

  levels_.resize(static_cast<std::size_t>(width_) + 1);
  for (std::size_t r = 0; r < bucket_start_.size(); ++r) {
    const auto rep = static_cast<std::uint64_t>(keys_[bucket_start_[r]]);
    for (int len = 0; len <= width_; ++len) {
      const std::uint64_t prefix = len == 0 ? 0 : rep >> (width_ - len);
      auto [it, fresh] = levels_[static_cast<std::size_t>(len)].try_emplace(
          prefix, Node{static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(r)});
      // Representatives arrive in increasing order, so only the max moves.
      if (!fresh) it->second.max_rep = static_cast<std::uint32_t>(r);
    }
  }
}

std::size_t YFastTrie::rep_at_or_below(std::uint64_t y) const {
  // Longest prefix of y present in the trie; the root level always matches.
  int lo = 0, hi = width_;
  while (lo < hi) {
    const int mid = (lo + hi + 1) / 2;
    const std::uint64_t prefix = y >> (width_ - mid);
    if (levels_[static_cast<std::size_t>(mid)].count(prefix)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const std::uint64_t prefix = lo == 0 ? 0 : y >> (width_ - lo);
  const Node& node = levels_[static_cast<std::size_t>(lo)].at(prefix);
  if (lo == width_) return node.min_rep;
  const bool goes_right = (y >> (width_ - lo - 1)) & 1;
  // Going right past a missing right child: everything under this node is smaller.
  // Going left past a missing left child: everything under it is larger.
  return goes_right ? node.max_rep : node.min_rep - 1;
}

Index YFastTrie::pred(Key x) const {
  if (keys_.empty() || x <= keys_.front()) return 0;
  if (x > keys_.back()) return size();
  const auto y = static_cast<std::uint64_t>(x - 1);
  const std::size_t r = rep_at_or_below(y);
  const auto first = keys_.begin() + static_cast<std::ptrdiff_t>(bucket_start_[r]);
  const auto last = r + 1 < bucket_start_.size()
                        ? keys_.begin() + static_cast<std::ptrdiff_t>(bucket_start_[r + 1])
                        : keys_.end();
  return static_cast<Index>(std::lower_bound(first, last, x) - keys_.begin());
}

SmallSetPredecessor::SmallSetPredecessor(std::vector<Key> keys) {
  if (!std::is_sorted(keys.begin(), keys.end()) ||
      std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    throw std::invalid_argument("small-set keys must be strictly increasing");
  }
  levels_.push_back(std::move(keys));
  while (levels_.back().size() > kFanout) {
    const auto& below = levels_.back();
    std::vector<Key> samples;
    for (std::size_t i = 0; i < below.size(); i += kFanout) samples.push_back(below[i]);
    levels_.push_back(std::move(samples));
  }
}

Index SmallSetPredecessor::pred(Key x) const {
  if (levels_.empty()) return 0;
  const auto& top = levels_.back();
  std::size_t c = 0;
  while (c < top.size() && top[c] < x) ++c;
  for (std::size_t l = levels_.size() - 1; l-- > 0;) {
    if (c == 0) return 0;
    // Sample c-1 (< x) sits at 8(c-1) here; sample c (>= x, if any) at 8c.
    const auto& level = levels_[l];
    std::size_t p = kFanout * (c - 1) + 1;
    const std::size_t limit = std::min(kFanout * c, level.size());
    while (p < limit && level[p] < x) ++p;
    c = p;
  }
  return static_cast<Index>(c);
}

Index BinarySearchPredecessor::pred(Key x) const { return count_below(keys_, x); }

std::string_view to_string(PredecessorFlavor f) {
  switch (f) {
    case PredecessorFlavor::yfast: return "yfast";
    case PredecessorFlavor::smallset: return "smallset";
    case PredecessorFlavor::binary: return "binary";
  }
  return "?";
}

PredecessorFlavor parse_predecessor_flavor(std::string_view name) {
  if (name == "yfast") return PredecessorFlavor::yfast;
  if (name == "smallset") return PredecessorFlavor::smallset;
  if (name == "binary") return PredecessorFlavor::binary;
  throw std::invalid_argument("unknown predecessor flavor '" + std::string(name) + "'");
}

PredecessorIndex::PredecessorIndex(const StaticKeySet& set, PredecessorFlavor flavor) : flavor_(flavor) {
  switch (flavor) {
    case PredecessorFlavor::yfast: impl_ = YFastTrie(set.keys(), set.universe()); break;
    case PredecessorFlavor::smallset: impl_ = SmallSetPredecessor(set.keys()); break;
    case PredecessorFlavor::binary: impl_ = BinarySearchPredecessor(set.keys()); break;
  }
}

}  // namespace cstq
