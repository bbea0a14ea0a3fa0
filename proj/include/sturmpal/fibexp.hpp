#pragma once

#include <cstddef>
#include <string>

#include "sturmpal/arith.hpp"
#include "sturmpal/words.hpp"

namespace sturmpal {

// Fibonacci numbers in the convention F_0 = 1, F_1 = 1, F_2 = 2,
// F_{n+2} = F_{n+1} + F_n: 1, 1, 2, 3, 5, 8, 13, ...
Integer fib_number(std::size_t i);

// Zeckendorf-style digit string (100)^{2n-1} 101, most significant digit
// first; position i from the right carries weight F_i.
std::string fib_prefix_digits(std::size_t n);

// Length of the n-th marked prefix of the Fibonacci word:
// F_0 + F_2 + sum_{k=1..2n-1} F_{3k+2}. Cross-checked internally against
// the digit-string value and the bound < F_{6n}.
Integer fib_prefix_length(std::size_t n);

// Prefix of the Fibonacci word (the fixed point of 0 -> 01, 1 -> 0) of the
// given length.
BinaryWord fibonacci_word_prefix(std::size_t length);

// The marked prefix itself: the first fib_prefix_length(n) letters of the
// Fibonacci word.
BinaryWord fib_prefix(std::size_t n);

struct FibRatioReport {
  std::size_t n = 0;
  std::size_t pal = 0;   // palindromic length of the marked prefix
  Integer length;        // its length
  double ratio = 0.0;    // pal / ln(length)
  double target = 0.0;   // 1 / (3 ln tau)
};

// Reporting only; asserts nothing beyond what fib_prefix_length checks.
FibRatioReport fib_ratio_report(std::size_t n);

// 1 / (3 ln tau), tau the golden ratio.
double fib_ratio_target();

}  // namespace sturmpal
