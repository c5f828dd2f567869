#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cstq {

using Symbol = std::uint32_t;
using Index = std::int64_t;

// Array stored 0-based, addressed with 1-based indices.
template <class T>
class OneBased {
 public:
  OneBased() = default;
  explicit OneBased(std::vector<T> values) : values_(std::move(values)) {}
  OneBased(Index n, const T& fill) : values_(static_cast<std::size_t>(n), fill) {}

  Index size() const { return static_cast<Index>(values_.size()); }
  bool empty() const { return values_.empty(); }

  const T& operator[](Index i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  T& operator[](Index i) { return values_[static_cast<std::size_t>(i - 1)]; }

  const T& at(Index i) const {
    if (i < 1 || i > size()) {
      throw std::out_of_range("index " + std::to_string(i) + " outside [1.." +
                              std::to_string(size()) + "]");
    }
    return (*this)[i];
  }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }
  const std::vector<T>& values() const { return values_; }

  friend bool operator==(const OneBased&, const OneBased&) = default;

 private:
  std::vector<T> values_;
};

class Text {
 public:
  Text() = default;
  // Throws std::invalid_argument if sigma is 0 or a symbol is >= sigma.
  Text(std::vector<Symbol> symbols, Symbol sigma);

  // Bytes map to their code points; sigma is 256.
  static Text from_bytes(std::string_view bytes);
  // Each character maps to its position in `alphabet`, e.g. ("abba", "ab") -> 0 1 1 0.
  static Text from_alphabet(std::string_view s, std::string_view alphabet);

  Index size() const { return static_cast<Index>(symbols_.size()); }
  bool empty() const { return symbols_.empty(); }
  Symbol sigma() const { return sigma_; }

  Symbol operator[](Index j) const { return symbols_[static_cast<std::size_t>(j - 1)]; }
  Symbol at(Index j) const;
  std::span<const Symbol> symbols() const { return symbols_; }

  Text reversed() const;
  // Appends c, widening sigma when c >= sigma.
  Text appended(Symbol c) const;
  std::string to_string(std::string_view alphabet) const;

  friend bool operator==(const Text&, const Text&) = default;

 private:
  std::vector<Symbol> symbols_;
  Symbol sigma_ = 1;
};

// Throws std::invalid_argument when the text is empty; `what` names the caller.
void require_nonempty(const Text& text, const char* what);

}  // namespace cstq
