#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "sturmpal/contfrac.hpp"
#include "sturmpal/growth.hpp"

using namespace sturmpal;

namespace {

ContinuedFraction golden() { return ContinuedFraction::parse("golden"); }
ContinuedFraction fib() { return ContinuedFraction::parse("fib"); }

}  // namespace

TEST_CASE("convergents by the standard recurrence") {
  CHECK(golden().convergent(4) == Rational(3, 5));
  CHECK(fib().convergent(1) == Rational(1, 2));
  // [0;2,1,1] evaluates to 2/5 by hand: 1/(2 + 1/(1 + 1/1)).
  CHECK(fib().convergent(3) == Rational(2, 5));
  CHECK(fib().convergent(4) == Rational(3, 8));
  CHECK_THROWS_AS(fib().convergent(0), std::invalid_argument);
}

TEST_CASE("consecutive convergents bracket every later one") {
  for (const char* spec : {"golden", "fib", "[0;(1,2)]", "[0;3,(2,1)]"}) {
    auto cf = ContinuedFraction::parse(spec);
    for (std::size_t k = 1; k + 2 <= 18; ++k) {
      Rational a = cf.convergent(k);
      Rational b = cf.convergent(k + 1);
      Rational c = cf.convergent(k + 2);
      Rational lo = a < b ? a : b;
      Rational hi = a < b ? b : a;
      CHECK(lo < c);
      CHECK(c < hi);
    }
  }
}

TEST_CASE("prepend shifts the quotient sequence and maps the value") {
  auto prepended = golden().prepend(Integer(2));
  CHECK(prepended.quotient(1) == Integer(2));
  CHECK(prepended.quotient(2) == Integer(1));
  // [0; b, a1, ..., ak] = 1/(b + [0; a1, ..., ak]) exactly.
  CHECK(prepended.convergent(5) == Rational(1) / (Integer(2) + golden().convergent(4)));
  CHECK(golden().prepend(Integer(1)).quotient(1) == Integer(1));
  CHECK_THROWS_AS(golden().prepend(Integer(0)), std::invalid_argument);
}

TEST_CASE("shift drops the head quotient") {
  auto shifted = fib().shifted();
  for (std::size_t k = 1; k <= 10; ++k) CHECK(shifted.quotient(k) == Integer(1));

  auto cf = ContinuedFraction::parse("[0;16,(3)]");
  CHECK(cf.shifted().quotient(1) == Integer(3));

  for (const char* spec : {"golden", "fib", "[0;(1,2)]", "[0;3,(2,1)]"}) {
    auto base = ContinuedFraction::parse(spec);
    for (Integer b = 1; b <= 4; ++b) {
      auto round_trip = base.prepend(b).shifted();
      for (std::size_t k = 1; k <= 12; ++k) {
        CHECK(round_trip.quotient(k) == base.quotient(k));
      }
    }
  }
}

TEST_CASE("shifting a periodic tail rotates the block") {
  auto cf = ContinuedFraction::parse("[0;(1,2)]");
  auto shifted = cf.shifted();
  CHECK(shifted.quotient(1) == Integer(2));
  CHECK(shifted.quotient(2) == Integer(1));
  CHECK(shifted.quotient(3) == Integer(2));
}

TEST_CASE("decimal parsing treats leading zeros as decimal") {
  CHECK(integer_from_decimal("007") == Integer(7));
  CHECK(integer_from_decimal("-09") == Integer(-9));
  CHECK(integer_from_decimal("0") == Integer(0));
  CHECK_THROWS_AS(integer_from_decimal("9x"), std::invalid_argument);
  CHECK_THROWS_AS(integer_from_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(integer_from_decimal("-"), std::invalid_argument);
  CHECK(ContinuedFraction::parse("[0; 07, (01)]").quotient(1) == Integer(7));
  // A malformed spec must fail as a parse error, never crash.
  CHECK_THROWS_AS(ContinuedFraction::parse("[09 wttl ;)/;w"), std::invalid_argument);
}

TEST_CASE("slope spec grammar") {
  CHECK(ContinuedFraction::parse("[0; 2, (1)]").quotient(1) == Integer(2));
  CHECK(ContinuedFraction::parse("[0;(1)]").quotient(5) == Integer(1));
  CHECK(ContinuedFraction::parse("[0; 3, (2, 1)]").quotient(4) == Integer(2));
  CHECK(golden().quotient(3) == Integer(1));
  CHECK(fib().quotient(1) == Integer(2));

  CHECK_THROWS_AS(ContinuedFraction::parse("[0; 1, 2]"), std::invalid_argument);
  CHECK_THROWS_AS(ContinuedFraction::parse("[1;(1)]"), std::invalid_argument);
  CHECK_THROWS_AS(ContinuedFraction::parse("[0;(0)]"), std::invalid_argument);
  CHECK_THROWS_AS(ContinuedFraction::parse("[0;(1)] junk"), std::invalid_argument);
  CHECK_THROWS_AS(ContinuedFraction::parse("nonsense"), std::invalid_argument);
}

TEST_CASE("rule tails reject invalid quotients on access") {
  auto cf = ContinuedFraction::from_rule({}, [](std::size_t) { return Integer(0); });
  CHECK_THROWS_AS(cf.quotient(1), std::invalid_argument);
}

TEST_CASE("rule tails and quotient narrowing") {
  auto cf = ContinuedFraction::from_rule(
      {Integer(5)}, [](std::size_t i) { return Integer(i + 1); }, "counting");
  CHECK(cf.quotient(1) == Integer(5));
  CHECK(cf.quotient(2) == Integer(1));
  CHECK(cf.quotient(4) == Integer(3));
  CHECK(cf.shifted().quotient(1) == Integer(1));
  CHECK(cf.shifted().shifted().quotient(1) == Integer(2));
  CHECK(cf.quotient_index(1, 100) == 5);
  CHECK_THROWS_AS(cf.quotient_index(1, 4), std::overflow_error);
}

TEST_CASE("slow-growth quotient construction") {
  CHECK(slow_growth_quotients(GrowthFunction::natural_log(), 1) ==
        std::vector<Integer>{Integer(3)});
  CHECK(slow_growth_quotients(GrowthFunction::log_log(), 1) ==
        std::vector<Integer>{Integer(16)});
  CHECK(slow_growth_quotients(GrowthFunction::natural_log(), 2) ==
        std::vector<Integer>{Integer(3), Integer(19)});
}

TEST_CASE("slow-growth quotients are minimal") {
  // Linear-scan cross-check of the galloping search.
  for (const auto& f : {GrowthFunction::natural_log(), GrowthFunction::power(Rational(1, 2)),
                        GrowthFunction::scaled_log(Rational(3))}) {
    auto quotients = slow_growth_quotients(f, 3);
    Integer product = 1;
    for (std::size_t k = 1; k <= quotients.size(); ++k) {
      const Integer target = Integer(k) * Integer(k);
      Integer minimal = 2;
      while (!f.at_least(product * minimal, target)) ++minimal;
      CHECK(quotients[k - 1] == minimal);
      product *= minimal;
    }
  }
}

TEST_CASE("slow-growth postcondition holds along the whole prefix") {
  auto f = GrowthFunction::power(Rational(1, 3));
  auto quotients = slow_growth_quotients(f, 5);
  Integer product = 1;
  for (std::size_t k = 1; k <= quotients.size(); ++k) {
    CHECK(quotients[k - 1] >= 2);
    product *= quotients[k - 1];
    CHECK(f.at_least(product, Integer(k) * Integer(k)));
  }
}

TEST_CASE("slow-growth expansion as a tail rule") {
  auto cf = ContinuedFraction::slow_growth(GrowthFunction::natural_log());
  CHECK(cf.quotient(1) == Integer(3));
  CHECK(cf.quotient(2) == Integer(19));
  CHECK(cf.shifted().quotient(1) == Integer(19));
}

TEST_CASE("growth spec strings") {
  CHECK(GrowthFunction::parse("ln").spec_string() == "ln");
  CHECK(GrowthFunction::parse("lnln").spec_string() == "lnln");
  CHECK(GrowthFunction::parse("pow:1/2").spec_string() == "pow:1/2");
  CHECK_THROWS_AS(GrowthFunction::parse("pow:3/2"), std::invalid_argument);
  CHECK_THROWS_AS(GrowthFunction::parse("exp"), std::invalid_argument);
  CHECK_THROWS_AS(GrowthFunction::parse("pow:x/2"), std::invalid_argument);
  CHECK_THROWS_AS(GrowthFunction::parse("pow:1/"), std::invalid_argument);
  CHECK_THROWS_AS(GrowthFunction::parse("pow:"), std::invalid_argument);
}

TEST_CASE("growth tables") {
  const std::string path = "growth_table_test.txt";
  {
    std::ofstream out(path);
    out << "# sample table\n";
    out << "1 0\n";
    out << "10 1\n";
    out << "100 5/2\n";
    out << "1000 4.5\n";
  }
  auto f = GrowthFunction::parse("table:" + path);
  CHECK(f.at_least(Integer(10), Integer(1)));
  CHECK_FALSE(f.at_least(Integer(9), Integer(1)));
  CHECK(f.at_least(Integer(5000), Integer(4)));
  CHECK_FALSE(f.can_reach(Integer(5)));
  CHECK(slow_growth_quotients(f, 1) == std::vector<Integer>{Integer(10)});
  CHECK_THROWS_AS(slow_growth_quotients(f, 3), std::domain_error);
  std::remove(path.c_str());

  CHECK_THROWS_AS(GrowthFunction::table({{Integer(5), Rational(2)},
                                         {Integer(3), Rational(4)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GrowthFunction::table({{Integer(3), Rational(4)},
                                         {Integer(5), Rational(2)}}),
                  std::invalid_argument);
}

TEST_CASE("spec string rendering") {
  CHECK(fib().spec_string() == "[0; 2, (1)]");
  CHECK(golden().spec_string() == "[0; (1)]");
}

TEST_CASE("spec strings of periodic slopes round-trip") {
  for (const char* spec : {"golden", "fib", "[0;(1,2)]", "[0;3,(2,1)]", "[0;16,(3)]"}) {
    auto cf = ContinuedFraction::parse(spec);
    auto reparsed = ContinuedFraction::parse(cf.spec_string());
    for (std::size_t k = 1; k <= 12; ++k) {
      CHECK(reparsed.quotient(k) == cf.quotient(k));
    }
    auto shifted = cf.shifted();
    auto shifted_reparsed = ContinuedFraction::parse(shifted.spec_string());
    for (std::size_t k = 1; k <= 12; ++k) {
      CHECK(shifted_reparsed.quotient(k) == shifted.quotient(k));
    }
  }
}
