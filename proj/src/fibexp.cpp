#include "sturmpal/fibexp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sturmpal/palen.hpp"

namespace sturmpal {

Integer fib_number(std::size_t i) {
  Integer a = 1, b = 1;  // F_0, F_1
  for (std::size_t k = 0; k < i; ++k) {
    Integer next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

std::string fib_prefix_digits(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  std::string digits;
  digits.reserve(6 * n);
  for (std::size_t k = 0; k < 2 * n - 1; ++k) digits += "100";
  digits += "101";
  return digits;
}

Integer fib_prefix_length(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  Integer length = fib_number(0) + fib_number(2);
  for (std::size_t k = 1; k <= 2 * n - 1; ++k) {
    length += fib_number(3 * k + 2);
  }

  // The closed form must match the digit-string value with position 0 (the
  // rightmost digit) weighted F_0, and stay below F_{6n}.
  const std::string digits = fib_prefix_digits(n);
  Integer from_digits = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[digits.size() - 1 - i] == '1') from_digits += fib_number(i);
  }
  if (from_digits != length) {
    throw std::logic_error("digit-string value disagrees with the closed form");
  }
  if (length >= fib_number(6 * n)) {
    throw std::logic_error("marked prefix length not below F_{6n}");
  }
  return length;
}

BinaryWord fibonacci_word_prefix(std::size_t length) {
  // Fixed point of 0 -> 01, 1 -> 0, built by the concatenation recurrence
  // s_{k+1} = s_k s_{k-1} starting from s_0 = "0", s_1 = "01".
  std::string prev = "0";
  std::string cur = "01";
  while (cur.size() < length) {
    std::string next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  cur.resize(length);
  return word_from_valid_symbols(std::move(cur));
}

BinaryWord fib_prefix(std::size_t n) {
  const Integer length = fib_prefix_length(n);
  return fibonacci_word_prefix(length.convert_to<std::size_t>());
}

FibRatioReport fib_ratio_report(std::size_t n) {
  FibRatioReport report;
  report.n = n;
  report.length = fib_prefix_length(n);
  report.pal = pal_length_fast(fib_prefix(n));
  report.ratio = static_cast<double>(report.pal) /
                 std::log(report.length.convert_to<double>());
  report.target = fib_ratio_target();
  return report;
}

double fib_ratio_target() {
  return 1.0 / (3.0 * std::log(std::numbers::phi_v<double>));
}

}  // namespace sturmpal
