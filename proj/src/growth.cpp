#include "sturmpal/growth.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sturmpal {

namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_100;

BigFloat to_float(const Integer& n) { return BigFloat(n); }

BigFloat to_float(const Rational& r) {
  return BigFloat(boost::multiprecision::numerator(r)) /
         BigFloat(boost::multiprecision::denominator(r));
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty number");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Integer num = integer_from_decimal(s.substr(0, slash));
    Integer den = integer_from_decimal(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_digits = s.size() - dot - 1;
    Integer den = 1;
    for (std::size_t i = 0; i < frac_digits; ++i) den *= 10;
    return Rational(integer_from_decimal(digits), den);
  }
  return Rational(integer_from_decimal(s));
}

}  // namespace

GrowthFunction GrowthFunction::natural_log() {
  return GrowthFunction(Shape::Ln, Rational(), {});
}

GrowthFunction GrowthFunction::log_log() {
  return GrowthFunction(Shape::LnLn, Rational(), {});
}

GrowthFunction GrowthFunction::power(const Rational& c) {
  if (c <= 0 || c >= 1) {
    throw std::invalid_argument("power exponent must lie in (0,1)");
  }
  return GrowthFunction(Shape::Pow, c, {});
}

GrowthFunction GrowthFunction::scaled_log(const Rational& c) {
  if (c <= 0) throw std::invalid_argument("log scale factor must be positive");
  return GrowthFunction(Shape::ScaledLn, c, {});
}

GrowthFunction GrowthFunction::table(
    std::vector<std::pair<Integer, Rational>> samples) {
  if (samples.empty()) throw std::invalid_argument("table needs at least one sample");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].first < 1) {
      throw std::invalid_argument("table arguments must be positive");
    }
    if (i > 0) {
      if (samples[i].first <= samples[i - 1].first) {
        throw std::invalid_argument("table arguments must be strictly increasing");
      }
      if (samples[i].second < samples[i - 1].second) {
        throw std::invalid_argument("table values must be non-decreasing");
      }
    }
  }
  return GrowthFunction(Shape::Table, Rational(), std::move(samples));
}

GrowthFunction GrowthFunction::parse(std::string_view spec) {
  if (spec == "ln") return natural_log();
  if (spec == "lnln") return log_log();
  constexpr std::string_view kPow = "pow:";
  constexpr std::string_view kTable = "table:";
  if (spec.substr(0, kPow.size()) == kPow) {
    return power(parse_rational(spec.substr(kPow.size())));
  }
  if (spec.substr(0, kTable.size()) == kTable) {
    std::string path(spec.substr(kTable.size()));
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open growth table: " + path);
    std::vector<std::pair<Integer, Rational>> samples;
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string n_text, v_text;
      if (!(ls >> n_text)) continue;
      if (!(ls >> v_text)) {
        throw std::invalid_argument("growth table line needs two columns: " + line);
      }
      samples.emplace_back(integer_from_decimal(n_text), parse_rational(v_text));
    }
    return table(std::move(samples));
  }
  throw std::invalid_argument("unknown growth spec: " + std::string(spec) +
                              " (expected ln | lnln | pow:<num>/<den> | table:<path>)");
}

bool GrowthFunction::at_least(const Integer& n, const Integer& threshold) const {
  if (n < 1) throw std::invalid_argument("growth functions are defined for n >= 1");
  switch (shape_) {
    case Shape::Ln:
      return log(to_float(n)) >= to_float(threshold);
    case Shape::LnLn: {
      if (n == 1) return false;  // ln ln 1 undefined, treated as -infinity
      return log(log(to_float(n))) >= to_float(threshold);
    }
    case Shape::Pow: {
      // n^{p/q} >= t  <=>  n^p >= t^q, both sides exact.
      const Integer p = boost::multiprecision::numerator(param_);
      const Integer q = boost::multiprecision::denominator(param_);
      if (threshold <= 0) return true;
      return boost::multiprecision::pow(n, p.convert_to<unsigned>()) >=
             boost::multiprecision::pow(threshold, q.convert_to<unsigned>());
    }
    case Shape::ScaledLn:
      return to_float(param_) * log(to_float(n)) >= to_float(threshold);
    case Shape::Table: {
      // Value at the greatest sample point <= n.
      auto it = std::upper_bound(
          samples_.begin(), samples_.end(), n,
          [](const Integer& v, const auto& s) { return v < s.first; });
      if (it == samples_.begin()) return false;
      return std::prev(it)->second >= Rational(threshold);
    }
  }
  throw std::logic_error("unknown growth shape");
}

bool GrowthFunction::can_reach(const Integer& threshold) const {
  if (shape_ != Shape::Table) return true;
  return samples_.back().second >= Rational(threshold);
}

double GrowthFunction::approx(const Integer& n) const {
  const double x = to_float(n).convert_to<double>();
  switch (shape_) {
    case Shape::Ln:
      return std::log(x);
    case Shape::LnLn:
      return std::log(std::log(x));
    case Shape::Pow:
      return std::pow(x, to_float(param_).convert_to<double>());
    case Shape::ScaledLn:
      return to_float(param_).convert_to<double>() * std::log(x);
    case Shape::Table: {
      auto it = std::upper_bound(
          samples_.begin(), samples_.end(), n,
          [](const Integer& v, const auto& s) { return v < s.first; });
      if (it == samples_.begin()) return -std::numeric_limits<double>::infinity();
      return to_float(std::prev(it)->second).convert_to<double>();
    }
  }
  throw std::logic_error("unknown growth shape");
}

std::string GrowthFunction::spec_string() const {
  switch (shape_) {
    case Shape::Ln:
      return "ln";
    case Shape::LnLn:
      return "lnln";
    case Shape::Pow: {
      std::ostringstream os;
      os << "pow:" << boost::multiprecision::numerator(param_) << "/"
         << boost::multiprecision::denominator(param_);
      return os.str();
    }
    case Shape::ScaledLn: {
      std::ostringstream os;
      os << boost::multiprecision::numerator(param_) << "/"
         << boost::multiprecision::denominator(param_) << "*ln";
      return os.str();
    }
    case Shape::Table:
      return "table";
  }
  return "?";
}

std::vector<Integer> slow_growth_quotients(const GrowthFunction& f,
                                           std::size_t count) {
  if (count == 0) throw std::invalid_argument("quotient count must be >= 1");
  std::vector<Integer> quotients;
  quotients.reserve(count);
  Integer product = 1;
  for (std::size_t k = 1; k <= count; ++k) {
    const Integer target = Integer(k) * Integer(k);
    if (!f.can_reach(target)) {
      throw std::domain_error("growth function too flat for requested quotient count");
    }
    Integer candidate = 2;
    if (!f.at_least(product * candidate, target)) {
      // Exponential galloping, then binary search for the minimal candidate.
      Integer lo = candidate;
      Integer hi = candidate;
      while (!f.at_least(product * hi, target)) {
        lo = hi;
        hi *= 2;
      }
      while (lo + 1 < hi) {
        Integer mid = (lo + hi) / 2;
        if (f.at_least(product * mid, target)) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      candidate = hi;
    }
    quotients.push_back(candidate);
    product *= candidate;
  }
  return quotients;
}

}  // namespace sturmpal
