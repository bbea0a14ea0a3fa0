#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "sturmpal/morphisms.hpp"
#include "sturmpal/palen.hpp"

using namespace sturmpal;

TEST_CASE("palindromic length on fixed words") {
  CHECK(pal_length_dp(BinaryWord()) == 0);
  CHECK(pal_length_dp(BinaryWord("0110")) == 1);
  CHECK(pal_length_dp(BinaryWord("01")) == 2);
  CHECK(pal_length_fast(BinaryWord("01")) == 2);
  CHECK(pal_length_fast(BinaryWord("10100101")) == 1);
  // The length-11 Fibonacci-word prefix happens to be a palindrome.
  CHECK(is_palindrome(BinaryWord("01001010010")));
  CHECK(pal_length_dp(BinaryWord("01001010010")) == 1);
  CHECK(pal_length_dp(BinaryWord("001101")) == 3);
}

TEST_CASE("both algorithms match the cubic reference exhaustively") {
  for (std::size_t len = 1; len <= 12; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::string w(len, '0');
      for (std::size_t i = 0; i < len; ++i) {
        if (bits & (std::size_t{1} << i)) w[i] = '1';
      }
      const std::size_t expected = testing::naive_pal_length(w);
      CHECK(pal_length_dp(w) == expected);
      CHECK(pal_length_fast(w) == expected);
    }
  }
}

TEST_CASE("the two algorithms agree on random words") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    std::string w = testing::random_binary_word(rng, 400);
    CHECK(pal_length_dp(w) == pal_length_fast(w));
  }
}

TEST_CASE("fast algorithm matches the cubic reference on random words") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 200; ++i) {
    std::string w = testing::random_binary_word(rng, 64);
    CHECK(pal_length_fast(w) == testing::naive_pal_length(w));
  }
}

TEST_CASE("factorization witnesses are valid and optimal") {
  CHECK(pal_factorization(BinaryWord("0110")).pieces() ==
        std::vector<BinaryWord>{BinaryWord("0110")});
  CHECK(pal_factorization(BinaryWord("01")).pieces() ==
        std::vector<BinaryWord>{BinaryWord("0"), BinaryWord("1")});
  CHECK(pal_factorization(BinaryWord()).piece_count() == 0);

  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    BinaryWord w(testing::random_binary_word(rng, 200));
    auto fact = pal_factorization(w);
    CHECK(fact.word() == w);
    CHECK(fact.piece_count() == pal_length_dp(w));
    for (const auto& piece : fact.pieces()) {
      CHECK_FALSE(piece.empty());
      CHECK(is_palindrome(piece));
    }
  }
}

TEST_CASE("backtracking prefers the longest final piece") {
  // At "0101" both "1" and "101" complete an optimal factorization; the
  // longer one wins.
  CHECK(pal_factorization(BinaryWord("0101")).pieces() ==
        std::vector<BinaryWord>{BinaryWord("0"), BinaryWord("101")});
  CHECK(pal_factorization(BinaryWord("0100")).pieces() ==
        std::vector<BinaryWord>{BinaryWord("010"), BinaryWord("0")});
}

TEST_CASE("factorization type validates its pieces") {
  CHECK_THROWS_AS(PalindromeFactorization({BinaryWord("01")}), std::invalid_argument);
  CHECK_THROWS_AS(PalindromeFactorization({BinaryWord()}), std::invalid_argument);
}

TEST_CASE("image factorization follows the pairing construction") {
  auto image = image_factorization(PalindromeFactorization({BinaryWord("010")}), 2);
  CHECK(image.pieces() == std::vector<BinaryWord>{BinaryWord("1"), BinaryWord("010010")});

  auto image2 = image_factorization(
      PalindromeFactorization({BinaryWord("0"), BinaryWord("1")}), 2);
  CHECK(image2.pieces() == std::vector<BinaryWord>{BinaryWord("101"), BinaryWord("00")});

  CHECK(image_factorization(PalindromeFactorization{}, 3).piece_count() == 0);

  // b = 1 maps the letter 0 to "1", so a piece can vanish.
  auto image3 = image_factorization(
      PalindromeFactorization({BinaryWord("1"), BinaryWord("0")}), 1);
  CHECK(image3.pieces() == std::vector<BinaryWord>{BinaryWord("101")});

  CHECK_THROWS_AS(image_factorization(PalindromeFactorization{}, 0),
                  std::invalid_argument);
}

TEST_CASE("images add at most one palindrome") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 150; ++i) {
    BinaryWord w(testing::random_binary_word(rng, 120));
    const std::size_t base = pal_length_dp(w);
    for (std::size_t b = 1; b <= 5; ++b) {
      BinaryWord image = apply(prepend_morphism(b), w);
      CHECK(pal_length_dp(image) <= base + 1);
      auto witness = image_factorization(pal_factorization(w), b);
      CHECK(witness.word() == image);
      CHECK(witness.piece_count() <= base + 1);
    }
  }
}

TEST_CASE("factor-vs-host palindromic length check") {
  CHECK(factor_pal_bound_holds(BinaryWord("0"), BinaryWord("010")));
  CHECK(factor_pal_bound_holds(BinaryWord("01"), BinaryWord("0110")));
  CHECK_THROWS_AS(factor_pal_bound_holds(BinaryWord("11"), BinaryWord("010")),
                  std::invalid_argument);

  // The relation is a check, not a theorem: a word can sit inside a
  // palindrome however many palindromes it needs itself. Smallest style of
  // counterexample: x followed by its reversal.
  const BinaryWord x("001101");
  const BinaryWord host = x + x.reversed();
  CHECK(pal_length_fast(x) == 3);
  CHECK(pal_length_fast(host) == 1);
  CHECK_FALSE(factor_pal_bound_holds(x, host));
}

TEST_CASE("factor palindromic length vs its bounding prefixes") {
  // What the factor-to-prefix transfer really gives: for x = y[i..j),
  // pal(x) <= pal(y[0..i)) + pal(y[0..j)).
  std::mt19937_64 rng(25);
  for (int t = 0; t < 200; ++t) {
    std::string host = testing::random_binary_word(rng, 150);
    if (host.empty()) continue;
    std::uniform_int_distribution<std::size_t> pos_dist(0, host.size() - 1);
    const std::size_t i = pos_dist(rng);
    std::uniform_int_distribution<std::size_t> len_dist(1, host.size() - i);
    const std::size_t j = i + len_dist(rng);
    BinaryWord y(host);
    CHECK(pal_length_fast(y.subword(i, j - i)) <=
          pal_length_fast(y.subword(0, i)) + pal_length_fast(y.subword(0, j)));
  }
}

TEST_CASE("palindromic length is subadditive under concatenation") {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 200; ++i) {
    BinaryWord u(testing::random_binary_word(rng, 80));
    BinaryWord v(testing::random_binary_word(rng, 80));
    CHECK(pal_length_fast(u + v) <= pal_length_fast(u) + pal_length_fast(v));
  }
}
