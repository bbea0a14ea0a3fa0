#include "sturmpal/arith.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace sturmpal {

Integer integer_from_decimal(std::string_view text) {
  const bool negative = !text.empty() && text[0] == '-';
  const std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (text.size() == start) {
    throw std::invalid_argument("bad number: " + std::string(text));
  }
  Integer value = 0;
  for (std::size_t i = start; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (!std::isdigit(c)) {
      throw std::invalid_argument("bad number: " + std::string(text));
    }
    value = value * 10 + (c - '0');
  }
  return negative ? -value : value;
}

}  // namespace sturmpal
