#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "sturmpal/words.hpp"

namespace sturmpal {

// Minimal number of palindromes whose concatenation equals w; 0 for the
// empty word, 1 exactly for nonempty palindromes.
//
// Two independent routes over a shared palindromic tree:
//   pal_length_dp    scans every palindromic suffix per position (quadratic
//                    worst case, simple, the reference),
//   pal_length_fast  collapses arithmetic series of palindromic suffixes
//                    via series links (O(n log n)).
std::size_t pal_length_dp(std::string_view w);
std::size_t pal_length_fast(std::string_view w);

inline std::size_t pal_length_dp(const BinaryWord& w) { return pal_length_dp(w.text()); }
inline std::size_t pal_length_fast(const BinaryWord& w) { return pal_length_fast(w.text()); }

// A concatenation of nonempty palindromes. Validated at construction.
class PalindromeFactorization {
 public:
  PalindromeFactorization() = default;
  explicit PalindromeFactorization(std::vector<BinaryWord> pieces);

  const std::vector<BinaryWord>& pieces() const noexcept { return pieces_; }
  std::size_t piece_count() const noexcept { return pieces_.size(); }

  // Concatenation of the pieces.
  BinaryWord word() const;

 private:
  std::vector<BinaryWord> pieces_;
};

// An optimal factorization: exactly pal_length_dp(w) pieces. Backtracking
// prefers the longest final piece at each step, so the witness is unique.
PalindromeFactorization pal_factorization(const BinaryWord& w);

// Pushes a factorization of v through the morphism 0 -> 1 0^{b-1},
// 1 -> 1 0^b: consecutive pieces (p, p') map to the palindromes
// image(p)·1 and 1^{-1}·image(p'); an odd trailing piece is split as
// "1" · 1^{-1}·image(p). Yields a factorization of the image of v into at
// most piece_count + 1 palindromes.
PalindromeFactorization image_factorization(const PalindromeFactorization& fact,
                                            std::size_t b);

// For x a factor of y: pal_length(x) <= 2 * pal_length(y)? Throws if x is
// not a factor of y. Expected to hold always.
bool factor_pal_bound_holds(const BinaryWord& x, const BinaryWord& y);

}  // namespace sturmpal
