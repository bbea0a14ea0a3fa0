#pragma once

#include <cstddef>
#include <set>
#include <string_view>
#include <vector>

#include "sturmpal/contfrac.hpp"
#include "sturmpal/words.hpp"

namespace sturmpal {

// Longest prefix any generator is willing to materialize by default.
inline constexpr std::size_t kDefaultPrefixLimit = std::size_t{1} << 27;

// The k-level morphism tower over the seed "0": with a_i the slope's
// quotients, returns the image of "0" under the composition of the
// prepend morphisms for a_1, ..., a_k (a_k applied first). The result for
// k is a prefix of the result for k+1, and its slope is exactly the k-th
// convergent.
BinaryWord tower_prefix(const ContinuedFraction& slope, std::size_t k,
                        std::size_t limit = kDefaultPrefixLimit);

// word_slope(tower_prefix(slope, k)), exact.
Rational empirical_slope(const ContinuedFraction& slope, std::size_t k);

// The set of factors of the Sturmian words of a given slope, materialized
// on demand from a growing tower prefix. A Sturmian language has exactly
// n+1 distinct factors of length n, which doubles as the stopping rule.
//
// Internally mutable (prefix cache); not safe for concurrent use of one
// instance.
class SturmianLanguage {
 public:
  explicit SturmianLanguage(ContinuedFraction slope,
                            std::size_t prefix_limit = kDefaultPrefixLimit);

  const ContinuedFraction& slope() const noexcept { return slope_; }

  // Exactly n+1 words of length n.
  std::set<BinaryWord> factors_of_length(std::size_t n);

  // First-occurrence positions of the n+1 distinct length-n factors in the
  // cached prefix, in textual order. The cheap path for bulk scans.
  std::vector<std::size_t> distinct_factor_positions(std::size_t n);

  // Extends the cached prefix to at least min_length symbols.
  std::string_view prefix(std::size_t min_length);

  std::string_view cached_prefix() const noexcept { return prefix_; }

 private:
  void extend_to_depth(std::size_t depth);

  ContinuedFraction slope_;
  std::size_t limit_;
  std::string prefix_;
  std::size_t depth_ = 0;
};

}  // namespace sturmpal
