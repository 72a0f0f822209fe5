#include <doctest.h>

#include <random>

#include "faithful/error.hpp"
#include "faithful/numeric.hpp"

using namespace faithful;

TEST_CASE("gcd and lcm") {
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(7, 0) == 7);
  CHECK(gcd(35, 64) == 1);
  CHECK(gcd(0, 0) == 0);
  CHECK(gcd(-12, 18) == 6);
  CHECK(lcm(4, 6) == 12);
}

TEST_CASE("egcd returns Bezout coefficients") {
  auto r = egcd(3, 7);
  CHECK(r.g == 1);
  CHECK(r.s == -2);
  CHECK(r.t == 1);

  r = egcd(1, 10);
  CHECK(r.g == 1);
  CHECK(r.s == 1);
  CHECK(r.t == 0);

  r = egcd(29, 30);
  CHECK(r.g == 1);
  CHECK(r.s == -1);
  CHECK(r.t == 1);

  CHECK_THROWS_AS(egcd(0, 0), PreconditionError);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Integer a(static_cast<unsigned long>(rng() % 100000)), b(static_cast<unsigned long>(rng() % 100000 + 1));
    auto e = egcd(a, b);
    CHECK(e.s * a + e.t * b == e.g);
    CHECK(e.g == gcd(a, b));
  }
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(4, 5) == 4);
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(mod_inverse(71, 105) == 71);
  CHECK_THROWS_AS(mod_inverse(6, 9), PreconditionError);
}

TEST_CASE("bezout_pair satisfies ym - xn = 1") {
  for (long n = 2; n < 60; ++n)
    for (long m = 1; m < n; ++m) {
      if (gcd(m, n) != 1) continue;
      const BezoutPair p = bezout_pair(m, n);
      CHECK(p.y * m - p.x * n == 1);
      CHECK(p.y >= 1);
      CHECK(p.y < n);
    }
}

TEST_CASE("is_prime small values against trial division") {
  auto slow = [](long v) {
    if (v < 2) return false;
    for (long d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  };
  for (long v = -5; v < 5000; ++v) CHECK_MESSAGE(is_prime(v) == slow(v), v);
  CHECK_FALSE(is_prime(105));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
}

TEST_CASE("is_prime large values") {
  CHECK(is_prime(Integer("18446744073709551557")));   // largest prime below 2^64
  CHECK_FALSE(is_prime(Integer("18446744073709551617")));  // 2^64 + 1 = 274177 * 67280421310721
  CHECK(is_prime(Integer("170141183460469231731687303715884105727")));  // 2^127 - 1
  CHECK_FALSE(is_prime(Integer("3317044064679887385961981")));  // strong pseudoprime to every base up to 41
  CHECK_FALSE(is_prime(Integer("318665857834031151167461")));  // strong pseudoprime to every base up to 37
  CHECK_FALSE(is_prime(Integer("3825123056546413051")));
  CHECK(next_prime(Integer("18446744073709551558")) == Integer("18446744073709551629"));
}

TEST_CASE("primes_avoiding") {
  std::vector<Integer> three{3}, none, thirty{30};
  CHECK(primes_avoiding(4, three, 2) == std::vector<Integer>{5, 7});
  CHECK(primes_avoiding(2, none, 3) == std::vector<Integer>{2, 3, 5});
  CHECK(primes_avoiding(2, thirty, 3) == std::vector<Integer>{7, 11, 13});
  CHECK(primes_avoiding(2, none, 0).empty());
}

TEST_CASE("in_ideal") {
  CHECK(in_ideal(Rational(1, 3), 9));
  CHECK_FALSE(in_ideal(Rational(1, 2), 3));
  CHECK(in_ideal(Rational(0), 17));
  CHECK(in_ideal(Rational(5), 1));
}

TEST_CASE("Rational stays canonical") {
  const Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), PreconditionError);
}

TEST_CASE("parse_integer") {
  CHECK(parse_integer("123456789012345678901234567890") == Integer("123456789012345678901234567890"));
  CHECK(parse_integer("-5") == -5);
  CHECK_THROWS_AS(parse_integer("12a"), PreconditionError);
  CHECK_THROWS_AS(parse_integer(""), PreconditionError);
  CHECK_THROWS_AS(parse_integer("+"), PreconditionError);
}
