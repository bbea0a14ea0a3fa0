#include "sturmpal/words.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace sturmpal {

BinaryWord::BinaryWord(std::string_view text) : sym_(text) {
  for (char c : sym_) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("binary word may contain only '0' and '1'");
    }
  }
}

BinaryWord BinaryWord::reversed() const {
  std::string r(sym_.rbegin(), sym_.rend());
  return word_from_valid_symbols(std::move(r));
}

BinaryWord BinaryWord::subword(std::size_t pos, std::size_t len) const {
  if (pos > sym_.size() || len > sym_.size() - pos) {
    throw std::out_of_range("subword range exceeds word length");
  }
  return word_from_valid_symbols(sym_.substr(pos, len));
}

bool BinaryWord::is_factor_of(const BinaryWord& host) const {
  return host.sym_.find(sym_) != std::string::npos;
}

bool BinaryWord::is_prefix_of(const BinaryWord& host) const {
  return sym_.size() <= host.sym_.size() &&
         host.sym_.compare(0, sym_.size(), sym_) == 0;
}

std::size_t count(const BinaryWord& w, int symbol) {
  if (symbol != 0 && symbol != 1) {
    throw std::invalid_argument("symbol must be 0 or 1");
  }
  const char c = static_cast<char>('0' + symbol);
  return static_cast<std::size_t>(std::count(w.str().begin(), w.str().end(), c));
}

Rational word_slope(const BinaryWord& w) {
  if (w.empty()) {
    throw std::domain_error("slope undefined for the empty word");
  }
  return Rational(Integer(count(w, 1)), Integer(w.size()));
}

bool is_palindrome(std::string_view w) {
  std::size_t i = 0;
  std::size_t j = w.size();
  while (i + 1 < j) {
    if (w[i] != w[j - 1]) return false;
    ++i;
    --j;
  }
  return true;
}

std::set<BinaryWord> distinct_factors(const BinaryWord& w, std::size_t n) {
  if (n == 0) throw std::invalid_argument("factor length must be >= 1");
  if (n > w.size()) throw std::invalid_argument("word too short for requested factor length");
  std::set<BinaryWord> out;
  for (std::size_t pos = 0; pos + n <= w.size(); ++pos) {
    out.insert(w.subword(pos, n));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BinaryWord& w) {
  return os << w.text();
}

}  // namespace sturmpal
