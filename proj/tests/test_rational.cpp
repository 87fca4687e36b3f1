#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "votemle/random.hpp"
#include "votemle/rational.hpp"

using namespace votemle;

TEST_CASE("bigint small arithmetic") {
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(-7).to_string() == "-7");
  CHECK((BigInt(123456789012345678LL) + BigInt(1)).to_string() == "123456789012345679");
  CHECK((BigInt(1000000000) * BigInt(1000000000)).to_string() == "1000000000000000000");
  CHECK((BigInt(5) - BigInt(9)).to_string() == "-4");
  CHECK(BigInt::from_string("-1234567890123456789012").to_string() == "-1234567890123456789012");
}

TEST_CASE("bigint powers") {
  CHECK(BigInt::pow(BigInt(2), 10).to_string() == "1024");
  CHECK(BigInt::pow(BigInt(3), 0).to_string() == "1");
  CHECK(BigInt::pow(BigInt(10), 30).to_string() == "1" + std::string(30, '0'));
}

TEST_CASE("bigint divmod matches the multiplication identity") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    BigInt a(rng.range(-1000000, 1000000));
    BigInt b(rng.range(1, 50000));
    a = a * BigInt(rng.range(1, 1000000000LL));
    auto [q, r] = BigInt::divmod(a, b);
    CHECK(q * b + r == a);
    // truncated division: |r| < |b| and r carries a's sign
    BigInt abs_r = r.signum() < 0 ? -r : r;
    BigInt abs_b = b.signum() < 0 ? -b : b;
    CHECK(abs_r < abs_b);
    if (!r.is_zero()) CHECK(r.signum() == a.signum());
  }
}

TEST_CASE("bigint gcd") {
  CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
  CHECK(BigInt::gcd(BigInt(7), BigInt(0)) == BigInt(7));
}

TEST_CASE("rational normalization and printing") {
  CHECK(Rational(2, 4).to_string() == "1/2");
  CHECK(Rational(-2, -4).to_string() == "1/2");
  CHECK(Rational(2, -4).to_string() == "-1/2");
  CHECK(Rational(0, 17).to_string() == "0/1");
  CHECK(Rational(8).to_string() == "8/1");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational parse") {
  CHECK(Rational::from_string("3/5") == Rational(3, 5));
  CHECK(Rational::from_string("6/10") == Rational(3, 5));
  CHECK(Rational::from_string("7") == Rational(7));
  CHECK_THROWS_AS(Rational::from_string("x/5"), std::invalid_argument);
}

TEST_CASE("rational ordering is exact") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(2, 3) > Rational(3, 5));
  CHECK(Rational(10, 15) == Rational(2, 3));
  // would collide under double rounding
  Rational tiny_gap_a(1000000000000000001LL, 1000000000000000000LL);
  Rational tiny_gap_b(1000000000000000002LL, 1000000000000000001LL);
  CHECK(tiny_gap_a > tiny_gap_b);
}

TEST_CASE("rational field identities hold on random values") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Rational a(rng.range(-50, 50), rng.range(1, 60));
    Rational b(rng.range(-50, 50), rng.range(1, 60));
    Rational c(rng.range(-50, 50), rng.range(1, 60));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + b == b + a);
    CHECK((a - b) + b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("rational pow handles negative exponents") {
  CHECK(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(Rational::pow(Rational(2, 3), 0) == Rational(1));
  CHECK(Rational::pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK_THROWS_AS(Rational::pow(Rational(0), -1), std::invalid_argument);
}
