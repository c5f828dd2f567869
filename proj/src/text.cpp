#include "cstq/text.hpp"

#include <algorithm>
#include <limits>

namespace cstq {

Text::Text(std::vector<Symbol> symbols, Symbol sigma) : symbols_(std::move(symbols)), sigma_(sigma) {
  if (sigma_ == 0) throw std::invalid_argument("alphabet bound sigma must be at least 1");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] >= sigma_) {
      throw std::invalid_argument("symbol " + std::to_string(symbols_[i]) + " at position " +
                                  std::to_string(i + 1) + " is not below sigma=" +
                                  std::to_string(sigma_));
    }
  }
}

Text Text::from_bytes(std::string_view bytes) {
  std::vector<Symbol> s(bytes.size());
  std::transform(bytes.begin(), bytes.end(), s.begin(),
                 [](char c) { return static_cast<Symbol>(static_cast<unsigned char>(c)); });
  return Text(std::move(s), 256);
}

Text Text::from_alphabet(std::string_view s, std::string_view alphabet) {
  if (alphabet.empty()) throw std::invalid_argument("empty alphabet");
  std::vector<Symbol> out;
  out.reserve(s.size());
  for (char c : s) {
    auto pos = alphabet.find(c);
    if (pos == std::string_view::npos) {
      throw std::invalid_argument(std::string("character '") + c + "' not in alphabet");
    }
    out.push_back(static_cast<Symbol>(pos));
  }
  return Text(std::move(out), static_cast<Symbol>(alphabet.size()));
}

Symbol Text::at(Index j) const {
  if (j < 1 || j > size()) {
    throw std::out_of_range("text position " + std::to_string(j) + " outside [1.." +
                            std::to_string(size()) + "]");
  }
  return (*this)[j];
}

Text Text::reversed() const {
  Text t = *this;
  std::reverse(t.symbols_.begin(), t.symbols_.end());
  return t;
}

Text Text::appended(Symbol c) const {
  if (c == std::numeric_limits<Symbol>::max()) throw std::overflow_error("symbol too wide to append");
  Text t = *this;
  t.symbols_.push_back(c);
  if (c >= t.sigma_) t.sigma_ = c + 1;
  return t;
}

std::string Text::to_string(std::string_view alphabet) const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) {
    if (s >= alphabet.size()) throw std::out_of_range("symbol outside display alphabet");
    out.push_back(alphabet[s]);
  }
  return out;
}

void require_nonempty(const Text& text, const char* what) {
  if (text.empty()) throw std::invalid_argument(std::string(what) + ": empty text");
}

}  // namespace cstq
