#include <doctest.h>

#include "sturmpal/fibexp.hpp"
#include "sturmpal/palen.hpp"
#include "sturmpal/sturmgen.hpp"

using namespace sturmpal;

TEST_CASE("fibonacci numbers use the F_0 = F_1 = 1 convention") {
  CHECK(fib_number(0) == Integer(1));
  CHECK(fib_number(1) == Integer(1));
  CHECK(fib_number(2) == Integer(2));
  CHECK(fib_number(5) == Integer(8));
  CHECK(fib_number(11) == Integer(144));
  CHECK(fib_number(23) == Integer(46368));
}

TEST_CASE("marked prefix lengths") {
  CHECK(fib_prefix_length(1) == Integer(11));
  CHECK(fib_prefix_length(2) == Integer(189));
  CHECK(fib_prefix_length(3) == Integer(3383));
  CHECK(fib_prefix_length(4) == Integer(60697));
  CHECK_THROWS_AS(fib_prefix_length(0), std::invalid_argument);

  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(fib_prefix_length(n) < fib_number(6 * n));
  }
}

TEST_CASE("digit strings") {
  CHECK(fib_prefix_digits(1) == "100101");
  CHECK(fib_prefix_digits(2) == "100100100101");
}

TEST_CASE("the fibonacci word starts as expected") {
  CHECK(fibonacci_word_prefix(11) == BinaryWord("01001010010"));
  CHECK(fibonacci_word_prefix(2) == BinaryWord("01"));
  CHECK(fibonacci_word_prefix(0) == BinaryWord());
  CHECK(fib_prefix(1) == BinaryWord("01001010010"));
}

TEST_CASE("fibonacci word prefixes occur in the same-slope tower word") {
  auto tower = tower_prefix(ContinuedFraction::parse("fib"), 16);
  CHECK(fibonacci_word_prefix(200).is_factor_of(tower));
}

TEST_CASE("marked prefixes respect the proved bound") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t pal = pal_length_fast(fib_prefix(n));
    CHECK(pal == pal_length_dp(fib_prefix(n)));
    CHECK(pal <= 2 * n + 1);
  }
}

TEST_CASE("marked prefix palindromic lengths, frozen once computed") {
  // The length-11 prefix is itself a palindrome; see the ratio discussion
  // in the README.
  CHECK(pal_length_fast(fib_prefix(1)) == 1);
  CHECK(pal_length_fast(fib_prefix(2)) == 3);
  CHECK(pal_length_fast(fib_prefix(3)) == 5);
  CHECK(pal_length_fast(fib_prefix(4)) == 7);
}

TEST_CASE("ratio report") {
  auto report = fib_ratio_report(1);
  CHECK(report.n == 1);
  CHECK(report.length == Integer(11));
  CHECK(report.pal == pal_length_fast(fib_prefix(1)));
  CHECK(report.ratio ==
        doctest::Approx(static_cast<double>(report.pal) / std::log(11.0)).epsilon(1e-9));
  CHECK(report.target == doctest::Approx(0.6927).epsilon(1e-3));
  CHECK(fib_ratio_target() == doctest::Approx(1.0 / (3.0 * std::log((1.0 + std::sqrt(5.0)) / 2.0))));
}
