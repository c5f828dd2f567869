#include "cstq/sparse_rmq.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cstq {

SparseTableRmq::SparseTableRmq(std::vector<std::int64_t> values) : values_(std::move(values)) {
  const std::size_t n = values_.size();
  if (n == 0) return;
  levels_.emplace_back(n);
  std::iota(levels_[0].begin(), levels_[0].end(), 0u);
  for (std::size_t k = 1; (std::size_t{1} << k) <= n; ++k) {
    const auto& prev = levels_[k - 1];
    const std::size_t half = std::size_t{1} << (k - 1);
    std::vector<std::uint32_t> cur(n - (std::size_t{1} << k) + 1);
    // For earlier ties `better` keeps its first argument, which is the left half.
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = better(prev[i], prev[i + half]);
    levels_.push_back(std::move(cur));
  }
}

Index SparseTableRmq::argmin(Index b, Index e) const {
  if (b < 0 || b >= e || e > size()) {
    throw std::invalid_argument("RMQ range (" + std::to_string(b) + ".." + std::to_string(e) +
                                "] is empty or outside [0.." + std::to_string(size()) + "]");
  }
  const auto lo = static_cast<std::size_t>(b);  // 0-based start of the window
  const auto len = static_cast<std::size_t>(e - b);
  const std::size_t k = std::bit_width(len) - 1;
  const auto& level = levels_[k];
  return static_cast<Index>(better(level[lo], level[lo + len - (std::size_t{1} << k)])) + 1;
}

}  // namespace cstq
