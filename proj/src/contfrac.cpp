#include "sturmpal/contfrac.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace sturmpal {

struct ContinuedFraction::Tail {
  virtual ~Tail() = default;
  // Tail quotient at 0-based index.
  virtual Integer at(std::size_t index) const = 0;
  virtual std::string render(std::size_t offset) const = 0;
};

namespace {

using Tail = ContinuedFraction::Tail;

void check_quotient(const Integer& q) {
  if (q < 1) throw std::invalid_argument("partial quotients must be >= 1");
}

struct PeriodicTail final : Tail {
  std::vector<Integer> block;

  explicit PeriodicTail(std::vector<Integer> b) : block(std::move(b)) {
    if (block.empty()) throw std::invalid_argument("periodic block must be nonempty");
    for (const auto& q : block) check_quotient(q);
  }

  Integer at(std::size_t index) const override { return block[index % block.size()]; }

  std::string render(std::size_t offset) const override {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) os << ", ";
      os << block[(offset + i) % block.size()];
    }
    os << ')';
    return os.str();
  }
};

struct RuleTail final : Tail {
  std::function<Integer(std::size_t)> rule;
  std::string description;

  RuleTail(std::function<Integer(std::size_t)> r, std::string d)
      : rule(std::move(r)), description(std::move(d)) {}

  Integer at(std::size_t index) const override {
    Integer q = rule(index);
    check_quotient(q);
    return q;
  }

  std::string render(std::size_t) const override { return "<" + description + ">"; }
};

// Quotients of the slow-growth construction, computed from scratch on each
// access; pure and deterministic, fast enough for the indices that occur.
struct SlowGrowthTail final : Tail {
  GrowthFunction f;

  explicit SlowGrowthTail(GrowthFunction fn) : f(std::move(fn)) {}

  Integer at(std::size_t index) const override {
    return slow_growth_quotients(f, index + 1).back();
  }

  std::string render(std::size_t) const override {
    return "<slow-growth:" + f.spec_string() + ">";
  }
};

}  // namespace

ContinuedFraction::ContinuedFraction(std::vector<Integer> head,
                                     std::shared_ptr<const Tail> tail,
                                     std::size_t tail_offset)
    : head_(std::move(head)), tail_(std::move(tail)), tail_offset_(tail_offset) {
  for (const auto& q : head_) check_quotient(q);
}

ContinuedFraction ContinuedFraction::periodic(std::vector<Integer> head,
                                              std::vector<Integer> repeating_block) {
  return ContinuedFraction(std::move(head),
                           std::make_shared<PeriodicTail>(std::move(repeating_block)), 0);
}

ContinuedFraction ContinuedFraction::from_rule(std::vector<Integer> head,
                                               std::function<Integer(std::size_t)> rule,
                                               std::string description) {
  if (!rule) throw std::invalid_argument("tail rule must be callable");
  return ContinuedFraction(
      std::move(head),
      std::make_shared<RuleTail>(std::move(rule), std::move(description)), 0);
}

ContinuedFraction ContinuedFraction::slow_growth(GrowthFunction f) {
  return ContinuedFraction({}, std::make_shared<SlowGrowthTail>(std::move(f)), 0);
}

Integer ContinuedFraction::quotient(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("quotient index is 1-based");
  if (k <= head_.size()) return head_[k - 1];
  return tail_->at(tail_offset_ + (k - head_.size() - 1));
}

std::size_t ContinuedFraction::quotient_index(std::size_t k, std::size_t limit) const {
  Integer q = quotient(k);
  if (q > limit) {
    throw std::overflow_error("partial quotient too large to materialize");
  }
  return q.convert_to<std::size_t>();
}

ContinuedFraction ContinuedFraction::prepend(const Integer& b) const {
  check_quotient(b);
  std::vector<Integer> head;
  head.reserve(head_.size() + 1);
  head.push_back(b);
  head.insert(head.end(), head_.begin(), head_.end());
  return ContinuedFraction(std::move(head), tail_, tail_offset_);
}

ContinuedFraction ContinuedFraction::shifted() const {
  if (!head_.empty()) {
    return ContinuedFraction(std::vector<Integer>(head_.begin() + 1, head_.end()),
                             tail_, tail_offset_);
  }
  return ContinuedFraction({}, tail_, tail_offset_ + 1);
}

Rational ContinuedFraction::convergent(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("convergent index is 1-based");
  // p_0/q_0 = 0/1, p_1/q_1 = 1/a1, then the standard recurrence.
  Integer p_prev = 1, q_prev = 0;  // p_{-1}/q_{-1}
  Integer p = 0, q = 1;            // p_0/q_0
  for (std::size_t i = 1; i <= k; ++i) {
    Integer a = quotient(i);
    Integer p_next = a * p + p_prev;
    Integer q_next = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
  }
  return Rational(p, q);
}

std::string ContinuedFraction::spec_string() const {
  std::ostringstream os;
  os << "[0;";
  for (std::size_t i = 0; i < head_.size(); ++i) {
    os << ' ' << head_[i] << ',';
  }
  os << ' ' << tail_->render(tail_offset_) << ']';
  return os.str();
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) {
      throw std::invalid_argument("malformed slope spec: expected '" +
                                  std::string(1, c) + "' at offset " +
                                  std::to_string(pos));
    }
  }

  Integer integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) {
      throw std::invalid_argument("malformed slope spec: expected an integer at offset " +
                                  std::to_string(pos));
    }
    return integer_from_decimal(text.substr(start, pos - start));
  }

  bool at_end() {
    skip_ws();
    return pos == text.size();
  }
};

}  // namespace

ContinuedFraction ContinuedFraction::parse(std::string_view spec) {
  if (spec == "golden") return periodic({}, {Integer(1)});
  if (spec == "fib") return periodic({Integer(2)}, {Integer(1)});

  Parser p{spec};
  p.expect('[');
  if (p.integer() != 0) {
    throw std::invalid_argument("slope spec must start with \"[0;\"");
  }
  p.expect(';');
  std::vector<Integer> head;
  std::vector<Integer> block;
  bool saw_block = false;
  while (true) {
    p.skip_ws();
    if (p.eat('(')) {
      block.push_back(p.integer());
      while (p.eat(',')) block.push_back(p.integer());
      p.expect(')');
      saw_block = true;
      break;
    }
    head.push_back(p.integer());
    if (!p.eat(',')) break;
  }
  p.expect(']');
  if (!p.at_end()) {
    throw std::invalid_argument("trailing characters after slope spec");
  }
  if (!saw_block) {
    throw std::invalid_argument(
        "slope spec must end with a repeating (...) block; the expansion is infinite");
  }
  return periodic(std::move(head), std::move(block));
}

}  // namespace sturmpal
