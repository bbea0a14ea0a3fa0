#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>

#include "sturmpal/arith.hpp"

namespace sturmpal {

// A finite word over {0,1}, stored as ASCII '0'/'1'. Immutable in spirit:
// all operations return new values.
class BinaryWord {
 public:
  BinaryWord() = default;

  // Validating constructor; rejects any character other than '0' and '1'.
  explicit BinaryWord(std::string_view text);

  static BinaryWord parse(std::string_view text) { return BinaryWord(text); }
  static BinaryWord zeros(std::size_t count) {
    return BinaryWord(std::string(count, '0'), unchecked_tag{});
  }

  std::size_t size() const noexcept { return sym_.size(); }
  bool empty() const noexcept { return sym_.empty(); }

  // Symbol at position i as 0 or 1.
  int bit(std::size_t i) const { return sym_[i] - '0'; }

  std::string_view text() const noexcept { return sym_; }
  const std::string& str() const noexcept { return sym_; }

  BinaryWord reversed() const;
  BinaryWord subword(std::size_t pos, std::size_t len) const;
  bool is_factor_of(const BinaryWord& host) const;
  bool is_prefix_of(const BinaryWord& host) const;

  BinaryWord& operator+=(const BinaryWord& rhs) {
    sym_ += rhs.sym_;
    return *this;
  }
  friend BinaryWord operator+(BinaryWord lhs, const BinaryWord& rhs) {
    lhs += rhs;
    return lhs;
  }

  auto operator<=>(const BinaryWord&) const = default;

 private:
  struct unchecked_tag {};
  BinaryWord(std::string s, unchecked_tag) : sym_(std::move(s)) {}

  std::string sym_;

  friend BinaryWord word_from_valid_symbols(std::string&& s);
};

// Internal factory for callers that build symbol strings which are '0'/'1'
// by construction (morphism images, tower prefixes).
inline BinaryWord word_from_valid_symbols(std::string&& s) {
  return BinaryWord(std::move(s), BinaryWord::unchecked_tag{});
}

// Number of occurrences of the given letter (0 or 1).
std::size_t count(const BinaryWord& w, int symbol);

// |w|_1 / |w| as an exact rational in [0,1]. Throws on the empty word.
Rational word_slope(const BinaryWord& w);

bool is_palindrome(std::string_view w);
inline bool is_palindrome(const BinaryWord& w) { return is_palindrome(w.text()); }

// All distinct length-n factors of w. Requires 1 <= n <= |w|.
std::set<BinaryWord> distinct_factors(const BinaryWord& w, std::size_t n);

std::ostream& operator<<(std::ostream& os, const BinaryWord& w);

}  // namespace sturmpal
