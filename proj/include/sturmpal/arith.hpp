#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string_view>

namespace sturmpal {

// Exact arithmetic used throughout the library. Slopes, convergents and
// length bounds must never pass through floating point.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Strict decimal parse: optional sign, then digits only. Leading zeros are
// plain decimal here, unlike cpp_int's literal rules where they mean octal.
// Throws std::invalid_argument on anything else.
Integer integer_from_decimal(std::string_view text);

}  // namespace sturmpal
