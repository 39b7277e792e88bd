#include "doctest.h"

#include <cstdint>
#include <stdexcept>

#include "sigmax/rational.hpp"

using sigmax::Rational;

TEST_CASE("rationals reduce and normalize sign on construction") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).den() == 1);
  CHECK(Rational(6, 3).num() == 2);
  CHECK(Rational(6, 3).den() == 1);
}

TEST_CASE("zero denominators are rejected") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("field operations stay exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(3, 5) == Rational(-3, 5));
  CHECK(Rational(1, 3) + Rational(2, 3) == Rational::one());
  CHECK(Rational(1, 3) - Rational(1, 3) == Rational::zero());
}

TEST_CASE("comparison is exact cross-multiplication") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(2, 4) <= Rational(1, 2));
  CHECK(Rational(7, 8) > Rational(6, 7));
  // 1/3 as a double rounds; as a rational it never equals 0.333...
  CHECK(Rational(1, 3) != Rational(333333333, 1000000000));
}

TEST_CASE("intermediates run through 128 bits") {
  // num and den both near 2^31: the cross products exceed 64 bits but the
  // reduced result fits.
  const Rational big(INT64_C(3037000499), INT64_C(3037000500));
  CHECK(big * Rational(INT64_C(3037000500), INT64_C(3037000499)) == Rational(1));
  const Rational half_max(INT64_MAX / 2, 1);
  CHECK(half_max + half_max == Rational(INT64_MAX - 1, 1));
}

TEST_CASE("results that leave 64 bits raise overflow") {
  const Rational max(INT64_MAX, 1);
  CHECK_THROWS_AS(max + max, std::overflow_error);
  CHECK_THROWS_AS(max * Rational(2), std::overflow_error);
  // irreducible sum of two primes-as-denominators stays in range
  CHECK_NOTHROW(Rational(1, 1000000007) + Rational(1, 1000000009));
}

TEST_CASE("rendering") {
  CHECK(Rational(3, 4).to_string() == "3/4");
  CHECK(Rational(5).to_string() == "5");
  CHECK(Rational(-1, 2).to_string() == "-1/2");
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational(1, 4).is_zero() == false);
  CHECK(Rational(0).is_zero());
  CHECK(Rational(7, 7).is_one());
}

TEST_CASE("min and max") {
  CHECK(sigmax::rational_min(Rational(1, 3), Rational(1, 2)) == Rational(1, 3));
  CHECK(sigmax::rational_max(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  CHECK(sigmax::rational_max(Rational(1, 2), Rational(1, 2)) == Rational(1, 2));
}
