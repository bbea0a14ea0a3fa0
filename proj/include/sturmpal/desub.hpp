#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "sturmpal/contfrac.hpp"
#include "sturmpal/words.hpp"

namespace sturmpal {

// One desubstitution of a factor v through the morphism 0 -> 1 0^{b-1},
// 1 -> 1 0^b:  v = left_scrap · image(core) · right_scrap, with
//   left_scrap   a run of <= b zeros (proper suffix of a letter image),
//   core         nonempty, a factor of the shifted-slope language,
//   right_scrap  empty or "1" followed by <= b-1 zeros (proper prefix of a
//                letter image).
struct DesubstitutionStep {
  std::size_t b = 0;
  BinaryWord left_scrap;   // v_L
  BinaryWord core;         // v'
  BinaryWord right_scrap;  // v_R
};

// Decodes v, which must contain at least two 1s and parse as a factor of an
// image under the b-morphism: internal zero runs of length b-1 decode to the
// letter 0 and length b to the letter 1; the trailing block joins the core
// only when forced (exactly b trailing zeros), otherwise it stays in
// right_scrap. Throws std::invalid_argument when v has fewer than two 1s or
// a zero run rules out every parse.
DesubstitutionStep desubstitute(const BinaryWord& v, std::size_t b);

struct ChainLevel {
  BinaryWord word;    // v^{(i)} before this level's desubstitution
  Integer quotient;   // a_i
  DesubstitutionStep step;
};

// Record of iterated desubstitution along a slope: level i decodes with the
// slope's i-th quotient, stopping at the first word with at most one 1.
struct DesubstitutionChain {
  std::vector<ChainLevel> levels;
  std::size_t steps = 0;        // j
  BinaryWord terminal;          // v^{(j+1)}: at most one 1, length >= 1
  Integer product_bound = 1;    // a_1 ... a_j, a lower bound on |v|
  std::size_t pal_bound = 2;    // 4j + 2, an upper bound on pal_length(v)
};

// Runs the chain and verifies both bounds plus the terminal conditions;
// throws std::logic_error if any fails (they are guaranteed for genuine
// factors) and propagates parse errors from desubstitute, which signal that
// v is not in the claimed language.
DesubstitutionChain desub_chain(const BinaryWord& v, const ContinuedFraction& slope);

// One line per level: b, scraps, core, running product bound.
void render_chain(const DesubstitutionChain& chain, std::ostream& os);

}  // namespace sturmpal
