#include <catch2/catch_amalgamated.hpp>

#include "tropid/tropid.hpp"

using tropid::Rational;

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(-2, 4).denominator() == 2);
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 17).str() == "0");
  CHECK(Rational(0, 17).denominator() == 1);
  CHECK(Rational(42).str() == "42");
  CHECK_THROWS_AS(Rational(5, 0), tropid::ValueError);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-7/3") == Rational(-7, 3));
  CHECK(Rational::parse("007") == Rational(7));
  CHECK(Rational::parse("6/4") == Rational(3, 2));

  const Rational big = Rational::parse("123456789012345678901234567891/7");
  CHECK_FALSE(big.is_small());
  CHECK(big.str() == "123456789012345678901234567891/7");
  CHECK(Rational::parse(big.str()) == big);
  // a numerator divisible by the denominator reduces to an integer
  CHECK(Rational::parse("123456789012345678901234567890/5").str() ==
        "24691357802469135780246913578");

  for (const char* bad : {"", "-", "1/0", "1/-2", "3/", "/3", "1.5", "+3", "1 2", "abc", "0x10"})
    CHECK_THROWS_AS(Rational::parse(bad), tropid::ParseError);
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(-Rational(7, 2) == Rational(-7, 2));
  CHECK(tropid::abs(Rational(-5, 3)) == Rational(5, 3));
  CHECK(Rational(1, 3) < Rational(34, 100));
  CHECK(tropid::min(Rational(1, 3), Rational(34, 100)) == Rational(1, 3));
  CHECK(tropid::max(Rational(-1), Rational(-2)) == Rational(-1));
}

TEST_CASE("rational small/big boundary") {
  const Rational a = Rational::parse("4611686018427387904");  // 2^62
  CHECK(a.is_small());
  const Rational doubled = a + a;
  CHECK_FALSE(doubled.is_small());  // 2^63 exceeds the machine-word range
  CHECK(doubled.str() == "9223372036854775808");
  CHECK(doubled - a == a);          // demotes back to the small form
  CHECK((doubled - a).is_small());
  CHECK(doubled > a);
  CHECK(doubled != a);

  const Rational x = Rational::parse("18446744073709551617/3");  // (2^64+1)/3
  CHECK_FALSE(x.is_small());
  CHECK(x * Rational(3) == Rational::parse("18446744073709551617"));
  CHECK((x - x).is_small());
  CHECK(x - x == Rational(0));
}

TEST_CASE("rational algebraic properties") {
  tropid::Rng rng(0xfeedbeef);
  auto draw = [&] {
    if (rng.below(40) == 0)  // occasionally cross the word-size boundary
      return Rational::parse("123456789123456789123456789") * Rational(rng.uniform(-3, 3));
    return Rational(rng.uniform(-1000000, 1000000), rng.uniform(1, 97));
  };
  for (int t = 0; t < 500; ++t) {
    const Rational x = draw(), y = draw(), z = draw();
    CHECK((x + y) + z == x + (y + z));
    CHECK(x + y == y + x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(tropid::min(x, y) + z == tropid::min(x + z, y + z));
    CHECK(x - x == Rational(0));
    CHECK(Rational::parse(x.str()) == x);
    // canonical form: positive denominator, reduced fraction
    CHECK(x.denominator() > 0);
    CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(x.numerator()),
                                     x.denominator()) == 1);
  }
}
