#pragma once

#include <string>
#include <vector>

#include "sturmpal/arith.hpp"
#include "sturmpal/words.hpp"

namespace sturmpal {

// Generators of the monoid of Sturm. Gt is the "tilde" variant of G.
//   E:  0 -> 1,  1 -> 0
//   G:  0 -> 0,  1 -> 01
//   Gt: 0 -> 0,  1 -> 10
enum class Generator { E, G, Gt };

const char* generator_name(Generator g);

// A morphism of the binary free monoid, given by the images of the two
// letters plus the generator decomposition it was built from. Equality is
// defined on images only; the generator word is kept for traces.
class SturmianMorphism {
 public:
  // Throws if an image is empty or if the generator word does not compose
  // to the given images (composition order: leftmost generator applied last).
  SturmianMorphism(BinaryWord image0, BinaryWord image1,
                   std::vector<Generator> generator_word);

  const BinaryWord& image0() const noexcept { return image0_; }
  const BinaryWord& image1() const noexcept { return image1_; }
  const std::vector<Generator>& generator_word() const noexcept { return gens_; }

  // Rendering for CLI traces, e.g. "0->10, 1->100 [G~ E G]".
  std::string render() const;

  friend bool operator==(const SturmianMorphism& a, const SturmianMorphism& b) {
    return a.image0_ == b.image0_ && a.image1_ == b.image1_;
  }

 private:
  BinaryWord image0_;
  BinaryWord image1_;
  std::vector<Generator> gens_;
};

SturmianMorphism generator(Generator g);

// Function composition: compose(f, g) applies g first, then f.
SturmianMorphism compose(const SturmianMorphism& f, const SturmianMorphism& g);

// Letterwise substitution.
BinaryWord apply(const SturmianMorphism& m, const BinaryWord& w);

// The morphism 0 -> 1 0^{b-1}, 1 -> 1 0^b. Applying it to a Sturmian word
// of slope [0; a1, a2, ...] yields one of slope [0; b, a1, a2, ...], hence
// the name. Decomposes as Gt^{b-1} o E o G. Requires b >= 1.
SturmianMorphism prepend_morphism(std::size_t b);

struct LetterCounts {
  Integer zeros;
  Integer ones;
  friend bool operator==(const LetterCounts&, const LetterCounts&) = default;
};

// Incidence-matrix action: exact letter counts of the image of any word
// with the given counts.
LetterCounts letter_counts_of_image(const SturmianMorphism& m, const LetterCounts& source);

}  // namespace sturmpal
