#include <doctest.h>

#include "motivic/rational.hpp"

using namespace motivic;

TEST_CASE("floor and ceil agree with integer division rounded correctly") {
  CHECK(rat_floor(Rat(7, 2)) == 3);
  CHECK(rat_floor(Rat(-7, 2)) == -4);
  CHECK(rat_floor(Rat(6, 2)) == 3);
  CHECK(rat_floor(Rat(-6, 2)) == -3);
  CHECK(rat_ceil(Rat(7, 2)) == 4);
  CHECK(rat_ceil(Rat(-7, 2)) == -3);
  CHECK(rat_ceil(Rat(5)) == 5);

  for (long long n = -20; n <= 20; ++n) {
    for (long long d = 1; d <= 7; ++d) {
      const Rat x(n, d);
      CHECK(Rat(rat_floor(x)) <= x);
      CHECK(x < Rat(rat_floor(x) + 1));
      CHECK(Rat(rat_ceil(x)) >= x);
      CHECK(x > Rat(rat_ceil(x) - 1));
    }
  }
}

TEST_CASE("rational gcd generates the additive group of its arguments") {
  CHECK(rat_gcd(Rat(0), Rat(0)) == Rat(0));
  CHECK(rat_gcd(Rat(0), Rat(3, 2)) == Rat(3, 2));
  CHECK(rat_gcd(Rat(1, 2), Rat(1, 3)) == Rat(1, 6));
  CHECK(rat_gcd(Rat(3, 4), Rat(1, 2)) == Rat(1, 4));
  const Rat g = rat_gcd(Rat(5, 6), Rat(7, 10));
  CHECK(rat_is_int(Rat(5, 6) / g));
  CHECK(rat_is_int(Rat(7, 10) / g));
}

TEST_CASE("integer square root bounds are exact around perfect squares") {
  CHECK(rat_sqrt_floor(Rat(0)) == 0);
  CHECK(rat_sqrt_floor(Rat(1)) == 1);
  CHECK(rat_sqrt_floor(Rat(35)) == 5);
  CHECK(rat_sqrt_floor(Rat(36)) == 6);
  CHECK(rat_sqrt_floor(Rat(37)) == 6);
  CHECK(rat_sqrt_floor(Rat(1, 2)) == 0);
  CHECK(rat_sqrt_floor(Rat(9, 4)) == 1);
  CHECK(rat_sqrt_ceil(Rat(9, 4)) == 2);
  CHECK(rat_sqrt_ceil(Rat(36)) == 6);
  CHECK(rat_sqrt_ceil(Rat(37)) == 7);
  CHECK_THROWS_AS(rat_sqrt_floor(Rat(-1)), std::invalid_argument);

  for (long long n = 0; n <= 200; ++n) {
    const long long k = rat_sqrt_floor(Rat(n));
    CHECK(k * k <= n);
    CHECK((k + 1) * (k + 1) > n);
  }
}

TEST_CASE("rational parsing round-trips and rejects junk") {
  CHECK(parse_rat("3") == Rat(3));
  CHECK(parse_rat("-3") == Rat(-3));
  CHECK(parse_rat("+3") == Rat(3));
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-3/4") == Rat(-3, 4));
  CHECK(parse_rat("6/4") == Rat(3, 2));
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);

  CHECK(rat_to_string(Rat(3)) == "3");
  CHECK(rat_to_string(Rat(-3, 4)) == "-3/4");
  CHECK(parse_rat(rat_to_string(Rat(-7, 2))) == Rat(-7, 2));
}
