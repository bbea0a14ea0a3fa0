#include "sturmpal/palen.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "sturmpal/eertree.hpp"
#include "sturmpal/morphisms.hpp"

namespace sturmpal {

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 2;

}  // namespace

std::size_t pal_length_dp(std::string_view w) {
  const std::size_t n = w.size();
  Eertree tree;
  std::vector<std::uint32_t> dp(n + 1, kInf);
  dp[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    tree.add(w[i]);
    for (std::int32_t v = tree.last(); tree.len(v) > 0; v = tree.suffix_link(v)) {
      const std::uint32_t cand = dp[i + 1 - tree.len(v)] + 1;
      if (cand < dp[i + 1]) dp[i + 1] = cand;
    }
  }
  return dp[n];
}

std::size_t pal_length_fast(std::string_view w) {
  const std::size_t n = w.size();
  Eertree tree;
  std::vector<std::uint32_t> dp(n + 1, kInf);
  std::vector<std::uint32_t> series_min;  // indexed by node, valid per position
  series_min.reserve(n + 2);
  dp[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    tree.add(w[i]);
    series_min.resize(tree.node_count(), kInf);
    for (std::int32_t v = tree.last(); tree.len(v) > 0; v = tree.series_link(v)) {
      // dp index just left of the shortest palindromic suffix in v's series.
      const std::size_t shortest = tree.len(tree.series_link(v)) + tree.diff(v);
      std::uint32_t best = dp[i + 1 - shortest];
      const std::int32_t suf = tree.suffix_link(v);
      if (tree.diff(v) == tree.diff(suf) && series_min[suf] < best) {
        best = series_min[suf];
      }
      series_min[v] = best;
      if (best + 1 < dp[i + 1]) dp[i + 1] = best + 1;
    }
  }
  return dp[n];
}

PalindromeFactorization::PalindromeFactorization(std::vector<BinaryWord> pieces)
    : pieces_(std::move(pieces)) {
  for (const auto& p : pieces_) {
    if (p.empty()) {
      throw std::invalid_argument("factorization pieces must be nonempty");
    }
    if (!is_palindrome(p)) {
      throw std::invalid_argument("factorization piece is not a palindrome: " + p.str());
    }
  }
}

BinaryWord PalindromeFactorization::word() const {
  BinaryWord out;
  for (const auto& p : pieces_) out += p;
  return out;
}

PalindromeFactorization pal_factorization(const BinaryWord& w) {
  const std::size_t n = w.size();
  if (n == 0) return PalindromeFactorization{};

  Eertree tree;
  std::vector<std::uint32_t> dp(n + 1, kInf);
  std::vector<std::int32_t> longest_suffix_node(n + 1, 1);
  dp[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    longest_suffix_node[i + 1] = tree.add(w.str()[i]);
    for (std::int32_t v = tree.last(); tree.len(v) > 0; v = tree.suffix_link(v)) {
      const std::uint32_t cand = dp[i + 1 - tree.len(v)] + 1;
      if (cand < dp[i + 1]) dp[i + 1] = cand;
    }
  }

  std::vector<BinaryWord> pieces;
  std::size_t at = n;
  while (at > 0) {
    // Longest palindromic suffix whose removal stays on an optimal path.
    std::int32_t v = longest_suffix_node[at];
    while (tree.len(v) > 0 && dp[at - tree.len(v)] + 1 != dp[at]) {
      v = tree.suffix_link(v);
    }
    if (tree.len(v) <= 0) {
      throw std::logic_error("factorization backtrack lost the optimal path");
    }
    const std::size_t len = static_cast<std::size_t>(tree.len(v));
    pieces.push_back(w.subword(at - len, len));
    at -= len;
  }
  std::reverse(pieces.begin(), pieces.end());
  return PalindromeFactorization(std::move(pieces));
}

PalindromeFactorization image_factorization(const PalindromeFactorization& fact,
                                            std::size_t b) {
  if (b == 0) throw std::invalid_argument("b must be >= 1");
  const SturmianMorphism psi = prepend_morphism(b);

  std::vector<BinaryWord> pieces;
  const auto& src = fact.pieces();
  const std::size_t m = src.size();
  const BinaryWord one("1");

  auto push_nonempty = [&pieces](BinaryWord piece) {
    if (!piece.empty()) pieces.push_back(std::move(piece));
  };

  std::size_t i = 0;
  for (; i + 1 < m; i += 2) {
    push_nonempty(apply(psi, src[i]) + one);
    BinaryWord img = apply(psi, src[i + 1]);
    push_nonempty(img.subword(1, img.size() - 1));  // images always start with 1
  }
  if (i < m) {
    // Odd leftover: image(p) = "1" · (1^{-1} image(p)), both palindromic.
    BinaryWord img = apply(psi, src[i]);
    pieces.push_back(one);
    push_nonempty(img.subword(1, img.size() - 1));
  }

  PalindromeFactorization out{std::move(pieces)};
  if (out.word() != apply(psi, fact.word())) {
    throw std::logic_error("image factorization does not concatenate to the image");
  }
  return out;
}

bool factor_pal_bound_holds(const BinaryWord& x, const BinaryWord& y) {
  if (!x.is_factor_of(y)) {
    throw std::invalid_argument("x is not a factor of y");
  }
  return pal_length_fast(x) <= 2 * pal_length_fast(y);
}

}  // namespace sturmpal
