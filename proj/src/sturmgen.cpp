#include "sturmpal/sturmgen.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "sturmpal/morphisms.hpp"

namespace sturmpal {

namespace {

// Length of the depth-k tower word, computed from incidence counts without
// building anything.
Integer tower_length(const ContinuedFraction& slope, std::size_t k) {
  Integer zeros = 1, ones = 0;  // seed "0"
  for (std::size_t i = k; i >= 1; --i) {
    const Integer b = slope.quotient(i);
    const Integer z = (b - 1) * zeros + b * ones;
    const Integer o = zeros + ones;
    zeros = z;
    ones = o;
  }
  return zeros + ones;
}

std::string build_tower(const ContinuedFraction& slope, std::size_t k,
                        std::size_t limit) {
  if (k == 0) throw std::invalid_argument("tower depth must be >= 1");
  if (tower_length(slope, k) > Integer(limit)) {
    throw std::length_error("tower prefix would exceed the length limit");
  }
  std::string w = "0";
  for (std::size_t i = k; i >= 1; --i) {
    const std::size_t b = slope.quotient_index(i, limit);
    const std::string im0 = "1" + std::string(b - 1, '0');
    const std::string im1 = "1" + std::string(b, '0');
    std::string next;
    next.reserve(w.size() * (b + 1));
    for (char c : w) next += (c == '1') ? im1 : im0;
    w = std::move(next);
  }
  return w;
}

struct WindowHash {
  std::uint64_t a, b;
  friend bool operator==(const WindowHash&, const WindowHash&) = default;
};

struct WindowHasher {
  std::size_t operator()(const WindowHash& h) const noexcept {
    return static_cast<std::size_t>(h.a * 0x9e3779b97f4a7c15ull ^ h.b);
  }
};

// First-occurrence positions of distinct length-n windows, at most `want`
// of them, scanning left to right with a double polynomial rolling hash.
std::vector<std::size_t> scan_windows(std::string_view text, std::size_t n,
                                      std::size_t want) {
  constexpr std::uint64_t kBase1 = 0x100000001b3ull;
  constexpr std::uint64_t kBase2 = 0xd6e8feb86659fd93ull;
  if (text.size() < n) return {};

  std::uint64_t pow1 = 1, pow2 = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    pow1 *= kBase1;
    pow2 *= kBase2;
  }
  std::uint64_t h1 = 0, h2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    h1 = h1 * kBase1 + static_cast<unsigned char>(text[i]);
    h2 = h2 * kBase2 + static_cast<unsigned char>(text[i]);
  }

  std::unordered_map<WindowHash, std::size_t, WindowHasher> first;
  first.reserve(want * 2);
  std::vector<std::size_t> positions;
  positions.reserve(want);
  for (std::size_t pos = 0;; ++pos) {
    if (first.emplace(WindowHash{h1, h2}, pos).second) {
      positions.push_back(pos);
      if (positions.size() == want) break;
    }
    if (pos + n >= text.size()) break;
    const auto out = static_cast<unsigned char>(text[pos]);
    const auto in = static_cast<unsigned char>(text[pos + n]);
    h1 = (h1 - out * pow1) * kBase1 + in;
    h2 = (h2 - out * pow2) * kBase2 + in;
  }
  return positions;
}

}  // namespace

BinaryWord tower_prefix(const ContinuedFraction& slope, std::size_t k,
                        std::size_t limit) {
  return word_from_valid_symbols(build_tower(slope, k, limit));
}

Rational empirical_slope(const ContinuedFraction& slope, std::size_t k) {
  return word_slope(tower_prefix(slope, k));
}

SturmianLanguage::SturmianLanguage(ContinuedFraction slope, std::size_t prefix_limit)
    : slope_(std::move(slope)), limit_(prefix_limit) {}

void SturmianLanguage::extend_to_depth(std::size_t depth) {
  if (depth <= depth_) return;
  prefix_ = build_tower(slope_, depth, limit_);
  depth_ = depth;
}

std::string_view SturmianLanguage::prefix(std::size_t min_length) {
  if (min_length > limit_) {
    throw std::length_error("requested prefix exceeds the language's length limit");
  }
  while (prefix_.size() < min_length) {
    // Deepen until the length target is met; lengths grow at least like
    // Fibonacci numbers in the depth, so this terminates quickly.
    std::size_t depth = depth_ + 1;
    while (tower_length(slope_, depth) < Integer(min_length)) ++depth;
    extend_to_depth(depth);
  }
  return prefix_;
}

std::vector<std::size_t> SturmianLanguage::distinct_factor_positions(std::size_t n) {
  if (n == 0) throw std::invalid_argument("factor length must be >= 1");
  const std::size_t want = n + 1;
  std::size_t target = std::max<std::size_t>(4 * n, 256);
  while (true) {
    prefix(std::min(target, limit_));
    auto positions = scan_windows(prefix_, n, want);
    if (positions.size() == want) return positions;
    if (prefix_.size() >= limit_) {
      throw std::length_error("factor enumeration hit the prefix length limit");
    }
    target = std::min(limit_, std::max(target * 2, prefix_.size() * 2));
  }
}

std::set<BinaryWord> SturmianLanguage::factors_of_length(std::size_t n) {
  std::set<BinaryWord> out;
  for (std::size_t pos : distinct_factor_positions(n)) {
    out.insert(word_from_valid_symbols(std::string(prefix_.substr(pos, n))));
  }
  return out;
}

}  // namespace sturmpal
