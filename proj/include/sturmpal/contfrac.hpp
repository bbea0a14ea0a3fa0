#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sturmpal/arith.hpp"
#include "sturmpal/growth.hpp"

namespace sturmpal {

// The slope of a Sturmian word as an infinite continued fraction
// [0; a1, a2, ...], all partial quotients >= 1. A finite head plus a tail
// rule; the tail never exhausts, so the value is irrational by construction.
// Immutable; tail rules are pure (same index, same quotient).
class ContinuedFraction {
 public:
  // Head followed by a forever-repeating block.
  static ContinuedFraction periodic(std::vector<Integer> head,
                                    std::vector<Integer> repeating_block);

  // Head followed by an explicit rule; rule(i) yields the i-th tail
  // quotient (0-based) and must be pure.
  static ContinuedFraction from_rule(std::vector<Integer> head,
                                     std::function<Integer(std::size_t)> rule,
                                     std::string description = "rule");

  // Entire expansion generated by the slow-growth construction for f:
  // a_k is the minimal integer >= 2 with f(a1...ak) >= k^2.
  static ContinuedFraction slow_growth(GrowthFunction f);

  // Mini-grammar "[0; a1, a2, ..., (p1, ..., pr)]" where the parenthesized
  // block repeats forever; aliases "golden" = [0;(1)], "fib" = [0;2,(1)].
  static ContinuedFraction parse(std::string_view spec);

  // Partial quotient a_k, 1-based.
  Integer quotient(std::size_t k) const;

  // a_k narrowed to an index-sized integer; throws std::overflow_error if
  // it exceeds `limit` (word generation cannot materialize such a block).
  std::size_t quotient_index(std::size_t k, std::size_t limit) const;

  // Expansion [0; b, a1, a2, ...]; the value becomes 1/(b + value).
  ContinuedFraction prepend(const Integer& b) const;

  // Drops a1; exact inverse of prepend on the quotient sequence.
  ContinuedFraction shifted() const;

  // p_k / q_k for the truncation [0; a1, ..., ak], k >= 1. Consecutive
  // convergents bracket the true value.
  Rational convergent(std::size_t k) const;

  std::string spec_string() const;

  struct Tail;  // implementation detail, opaque

 private:
  ContinuedFraction(std::vector<Integer> head, std::shared_ptr<const Tail> tail,
                    std::size_t tail_offset);

  std::vector<Integer> head_;
  std::shared_ptr<const Tail> tail_;
  std::size_t tail_offset_ = 0;
};

inline Rational convergent(const ContinuedFraction& cf, std::size_t k) {
  return cf.convergent(k);
}
inline ContinuedFraction prepend(const Integer& b, const ContinuedFraction& cf) {
  return cf.prepend(b);
}
inline ContinuedFraction shift(const ContinuedFraction& cf) { return cf.shifted(); }

}  // namespace sturmpal
