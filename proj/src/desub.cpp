#include "sturmpal/desub.hpp"

#include <ostream>
#include <stdexcept>

#include "sturmpal/morphisms.hpp"
#include "sturmpal/palen.hpp"

namespace sturmpal {

DesubstitutionStep desubstitute(const BinaryWord& v, std::size_t b) {
  if (b == 0) throw std::invalid_argument("b must be >= 1");
  if (count(v, 1) < 2) throw std::invalid_argument("desubstitution needs at least two 1s");

  const std::string& s = v.str();
  const std::size_t n = s.size();

  std::size_t first_one = s.find('1');
  if (first_one > b) {
    throw std::invalid_argument(
        "not a factor of any image: leading zero run longer than b");
  }

  DesubstitutionStep step;
  step.b = b;
  step.left_scrap = v.subword(0, first_one);

  std::string core;
  std::size_t pos = first_one;
  while (true) {
    // Block starts at a 1; measure the zero run that follows.
    std::size_t next_one = s.find('1', pos + 1);
    if (next_one == std::string::npos) {
      const std::size_t zeros = n - pos - 1;
      if (zeros > b) {
        throw std::invalid_argument(
            "not a factor of any image: trailing zero run longer than b");
      }
      if (zeros == b) {
        core += '1';  // complete letter-1 image, forced
        step.right_scrap = BinaryWord();
      } else {
        // Length b-1 would be a complete letter-0 image but also a proper
        // prefix of the letter-1 image; the ambiguous block stays on the
        // right so every decoded core letter is forced.
        step.right_scrap = v.subword(pos, n - pos);
      }
      break;
    }
    const std::size_t zeros = next_one - pos - 1;
    if (zeros == b - 1) {
      core += '0';
    } else if (zeros == b) {
      core += '1';
    } else {
      throw std::invalid_argument(
          "not a factor of any image: internal zero run of length " +
          std::to_string(zeros) + " with b=" + std::to_string(b));
    }
    pos = next_one;
  }

  step.core = BinaryWord(core);
  if (step.core.empty()) {
    throw std::logic_error("desubstitution produced an empty core");
  }
  if (step.left_scrap + apply(prepend_morphism(b), step.core) + step.right_scrap != v) {
    throw std::logic_error("desubstitution reconstruction failed");
  }
  return step;
}

DesubstitutionChain desub_chain(const BinaryWord& v, const ContinuedFraction& slope) {
  if (v.empty()) throw std::invalid_argument("cannot desubstitute the empty word");

  DesubstitutionChain chain;
  BinaryWord current = v;
  ContinuedFraction level_slope = slope;
  while (count(current, 1) >= 2) {
    const Integer quotient = level_slope.quotient(1);
    // Two 1s force an internal zero run of length b-1 or b, so any
    // parseable word has length at least b+1.
    if (quotient >= Integer(current.size())) {
      throw std::invalid_argument(
          "not a factor of any image: quotient exceeds word length");
    }
    const std::size_t b = quotient.convert_to<std::size_t>();
    DesubstitutionStep step = desubstitute(current, b);
    BinaryWord next = step.core;
    chain.levels.push_back(ChainLevel{std::move(current), quotient, std::move(step)});
    chain.product_bound *= quotient;
    current = std::move(next);
    level_slope = level_slope.shifted();
  }
  chain.steps = chain.levels.size();
  chain.terminal = std::move(current);
  chain.pal_bound = 4 * chain.steps + 2;

  if (count(chain.terminal, 1) > 1 || chain.terminal.empty()) {
    throw std::logic_error("chain terminal must be nonempty with at most one 1");
  }
  if (pal_length_fast(chain.terminal) > 2) {
    throw std::logic_error("chain terminal has palindromic length > 2");
  }
  if (Integer(v.size()) < chain.product_bound) {
    throw std::logic_error("length bound violated: |v| < product of quotients");
  }
  if (pal_length_fast(v) > chain.pal_bound) {
    throw std::logic_error("palindromic length bound 4j+2 violated");
  }
  return chain;
}

void render_chain(const DesubstitutionChain& chain, std::ostream& os) {
  Integer product = 1;
  for (std::size_t i = 0; i < chain.levels.size(); ++i) {
    const ChainLevel& level = chain.levels[i];
    product *= level.quotient;
    os << "level " << (i + 1) << ": b=" << level.quotient
       << "  v=" << level.word
       << "  v_L=" << (level.step.left_scrap.empty() ? "-" : level.step.left_scrap.str())
       << "  v'=" << level.step.core
       << "  v_R=" << (level.step.right_scrap.empty() ? "-" : level.step.right_scrap.str())
       << "  pal=" << pal_length_dp(level.word)
       << "  product_bound=" << product << "\n";
  }
  os << "terminal: " << chain.terminal
     << "  pal=" << pal_length_dp(chain.terminal)
     << "  steps=" << chain.steps
     << "  length_bound=" << chain.product_bound
     << "  pal_bound=" << chain.pal_bound << "\n";
}

}  // namespace sturmpal
