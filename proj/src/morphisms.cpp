#include "sturmpal/morphisms.hpp"

#include <stdexcept>
#include <utility>

namespace sturmpal {

namespace {

std::string apply_raw(const std::string& im0, const std::string& im1,
                      std::string_view w) {
  std::size_t ones = 0;
  for (char c : w) ones += (c == '1');
  std::string out;
  out.reserve((w.size() - ones) * im0.size() + ones * im1.size());
  for (char c : w) out += (c == '1') ? im1 : im0;
  return out;
}

// Images of a single generator.
std::pair<std::string, std::string> generator_images(Generator g) {
  switch (g) {
    case Generator::E:
      return {"1", "0"};
    case Generator::G:
      return {"0", "01"};
    case Generator::Gt:
      return {"0", "10"};
  }
  throw std::logic_error("unknown generator");
}

// Fold of the generator word applied to a single letter; rightmost
// generator acts first.
std::string fold_generators(const std::vector<Generator>& gens, char letter) {
  std::string w(1, letter);
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    auto [im0, im1] = generator_images(*it);
    w = apply_raw(im0, im1, w);
  }
  return w;
}

}  // namespace

const char* generator_name(Generator g) {
  switch (g) {
    case Generator::E:
      return "E";
    case Generator::G:
      return "G";
    case Generator::Gt:
      return "G~";
  }
  return "?";
}

SturmianMorphism::SturmianMorphism(BinaryWord image0, BinaryWord image1,
                                   std::vector<Generator> generator_word)
    : image0_(std::move(image0)),
      image1_(std::move(image1)),
      gens_(std::move(generator_word)) {
  if (image0_.empty() || image1_.empty()) {
    throw std::invalid_argument("morphism images must be nonempty");
  }
  if (fold_generators(gens_, '0') != image0_.str() ||
      fold_generators(gens_, '1') != image1_.str()) {
    throw std::invalid_argument("generator word does not compose to the given images");
  }
}

std::string SturmianMorphism::render() const {
  std::string s = "0->" + image0_.str() + ", 1->" + image1_.str() + " [";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ' ';
    s += generator_name(gens_[i]);
  }
  s += ']';
  return s;
}

SturmianMorphism generator(Generator g) {
  auto [im0, im1] = generator_images(g);
  return SturmianMorphism(BinaryWord(im0), BinaryWord(im1), {g});
}

SturmianMorphism compose(const SturmianMorphism& f, const SturmianMorphism& g) {
  BinaryWord im0 = apply(f, g.image0());
  BinaryWord im1 = apply(f, g.image1());
  std::vector<Generator> gens = f.generator_word();
  gens.insert(gens.end(), g.generator_word().begin(), g.generator_word().end());
  return SturmianMorphism(std::move(im0), std::move(im1), std::move(gens));
}

BinaryWord apply(const SturmianMorphism& m, const BinaryWord& w) {
  return word_from_valid_symbols(
      apply_raw(m.image0().str(), m.image1().str(), w.text()));
}

SturmianMorphism prepend_morphism(std::size_t b) {
  if (b == 0) throw std::invalid_argument("b must be >= 1");
  std::string im0 = "1" + std::string(b - 1, '0');
  std::string im1 = "1" + std::string(b, '0');
  std::vector<Generator> gens(b - 1, Generator::Gt);
  gens.push_back(Generator::E);
  gens.push_back(Generator::G);
  return SturmianMorphism(BinaryWord(im0), BinaryWord(im1), std::move(gens));
}

LetterCounts letter_counts_of_image(const SturmianMorphism& m,
                                    const LetterCounts& source) {
  if (source.zeros < 0 || source.ones < 0) {
    throw std::invalid_argument("letter counts must be non-negative");
  }
  const Integer z0 = count(m.image0(), 0);
  const Integer o0 = count(m.image0(), 1);
  const Integer z1 = count(m.image1(), 0);
  const Integer o1 = count(m.image1(), 1);
  return LetterCounts{source.zeros * z0 + source.ones * z1,
                      source.zeros * o0 + source.ones * o1};
}

}  // namespace sturmpal
