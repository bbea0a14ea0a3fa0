#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sturmpal/arith.hpp"

namespace sturmpal {

// A non-decreasing divergent function on the positive integers, drawn from a
// closed set of shapes. Only ever queried through exact or high-precision
// threshold comparisons; plain `approx` is for reporting.
class GrowthFunction {
 public:
  static GrowthFunction natural_log();                 // ln n
  static GrowthFunction log_log();                     // ln ln n
  static GrowthFunction power(const Rational& c);      // n^c, rational c in (0,1)
  static GrowthFunction scaled_log(const Rational& c); // c * ln n, c > 0

  // Step function through sample points (n_i, f(n_i)); n_i strictly
  // increasing, f(n_i) non-decreasing. Below the first sample the function
  // is treated as -infinity; beyond the last it stays at the last value.
  static GrowthFunction table(std::vector<std::pair<Integer, Rational>> samples);

  // Spec strings: "ln" | "lnln" | "pow:<num>/<den>" | "table:<path>".
  static GrowthFunction parse(std::string_view spec);

  // f(n) >= threshold? Exact for the power and table shapes; logarithmic
  // shapes compare at 100 decimal digits.
  bool at_least(const Integer& n, const Integer& threshold) const;

  // Can f reach the threshold at all? False only for a table whose last
  // value is below it.
  bool can_reach(const Integer& threshold) const;

  // Reporting only.
  double approx(const Integer& n) const;

  std::string spec_string() const;

 private:
  enum class Shape { Ln, LnLn, Pow, ScaledLn, Table };

  GrowthFunction(Shape shape, Rational param,
                 std::vector<std::pair<Integer, Rational>> samples)
      : shape_(shape), param_(std::move(param)), samples_(std::move(samples)) {}

  Shape shape_;
  Rational param_;
  std::vector<std::pair<Integer, Rational>> samples_;
};

// The quotient construction for arbitrarily slow growth: a_1, ..., a_K with
// every a_k >= 2 minimal such that f(a_1 a_2 ... a_k) >= k^2 given the
// previously fixed quotients. Deterministic; throws if f cannot reach the
// required thresholds (bounded table).
std::vector<Integer> slow_growth_quotients(const GrowthFunction& f, std::size_t count);

}  // namespace sturmpal
