#pragma once

#include <cstdint>
#include <vector>

#include "cstq/text.hpp"

namespace cstq {

// Range-minimum over a static integer array. Positions are 1-based and a query
// (b..e] returns the smallest position holding the minimum.
class SparseTableRmq {
 public:
  SparseTableRmq() = default;
  explicit SparseTableRmq(std::vector<std::int64_t> values);

  // Throws std::invalid_argument unless 0 <= b < e <= size().
  Index argmin(Index b, Index e) const;
  std::int64_t value(Index i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  Index size() const { return static_cast<Index>(values_.size()); }

 private:
  std::uint32_t better(std::uint32_t a, std::uint32_t b) const {
    return values_[b] < values_[a] ? b : a;
  }

  std::vector<std::int64_t> values_;
  // levels_[k][i]: 0-based argmin of values_[i .. i + 2^k).
  std::vector<std::vector<std::uint32_t>> levels_;
};

}  // namespace cstq
