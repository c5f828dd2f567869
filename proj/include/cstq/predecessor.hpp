#pragma once

#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "cstq/text.hpp"

namespace cstq {

using Key = std::int64_t;

// Strictly increasing keys a_1 < ... < a_m in [0..u]. Predecessor results are
// indices in [0..m]; index 0 stands for "no key below x".
class StaticKeySet {
 public:
  StaticKeySet() = default;
  // Throws std::invalid_argument on unsorted, duplicate or out-of-universe keys.
  StaticKeySet(std::vector<Key> keys, Key universe);

  Index size() const { return static_cast<Index>(keys_.size()); }
  Key universe() const { return universe_; }
  Key key(Index i) const { return keys_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<Key>& keys() const { return keys_; }

 private:
  std::vector<Key> keys_;
  Key universe_ = 0;
};

// Reference predecessor by binary search: #{a_i < x}.
Index pred(const StaticKeySet& set, Key x);
// Parity of the number of keys below x.
int pred_color(const StaticKeySet& set, Key x);

// x-fast levels over bucket representatives plus sorted buckets of about
// log u keys each.
class YFastTrie {
 public:
  YFastTrie() = default;
  YFastTrie(std::vector<Key> keys, Key universe);

  Index pred(Key x) const;
  Index size() const { return static_cast<Index>(keys_.size()); }

 private:
  struct Node {
    std::uint32_t min_rep;
    std::uint32_t max_rep;
  };

  // Index into bucket_start_ of the last representative <= y; y >= keys_.front().
  std::size_t rep_at_or_below(std::uint64_t y) const;

  int width_ = 1;
  std::vector<Key> keys_;
  std::vector<std::size_t> bucket_start_;
  // levels_[L] maps the top L bits of a representative to the representatives below it.
  std::vector<std::unordered_map<std::uint64_t, Node>> levels_;
};

// Small sorted sets: linear scans over a hierarchy of every-8th samples.
class SmallSetPredecessor {
 public:
  static constexpr std::size_t kFanout = 8;

  SmallSetPredecessor() = default;
  explicit SmallSetPredecessor(std::vector<Key> keys);

  Index pred(Key x) const;
  Index size() const { return levels_.empty() ? 0 : static_cast<Index>(levels_[0].size()); }

 private:
  std::vector<std::vector<Key>> levels_;
};

class BinarySearchPredecessor {
 public:
  BinarySearchPredecessor() = default;
  explicit BinarySearchPredecessor(std::vector<Key> keys) : keys_(std::move(keys)) {}
  Index pred(Key x) const;

 private:
  std::vector<Key> keys_;
};

enum class PredecessorFlavor { yfast, smallset, binary };

std::string_view to_string(PredecessorFlavor f);
// Throws std::invalid_argument on unknown names.
PredecessorFlavor parse_predecessor_flavor(std::string_view name);

// Any of the flavors above behind one interface.
class PredecessorIndex {
 public:
  PredecessorIndex() = default;
  PredecessorIndex(const StaticKeySet& set, PredecessorFlavor flavor);

  Index pred(Key x) const {
    return std::visit([x](const auto& s) { return s.pred(x); }, impl_);
  }
  PredecessorFlavor flavor() const { return flavor_; }

 private:
  PredecessorFlavor flavor_ = PredecessorFlavor::binary;
  std::variant<BinarySearchPredecessor, YFastTrie, SmallSetPredecessor> impl_;
};

}  // namespace cstq
