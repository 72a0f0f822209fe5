#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace faithful {

using Integer = mpz_class;

/// Parses a base-10 integer (optional leading '-'). Throws PreconditionError
/// on anything else.
Integer parse_integer(const std::string& text);

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT: implicit from integers
  Rational(const Integer& value) : q_(value) {}  // NOLINT
  Rational(const Integer& num, const Integer& den);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Largest integer not exceeding the value.
  Integer floor() const;

  /// "n/d", or just "n" when the denominator is 1.
  std::string str() const;
  double to_double() const { return q_.get_d(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

struct RationalHash {
  std::size_t operator()(const Rational& r) const;
};

struct IntegerHash {
  std::size_t operator()(const Integer& z) const;
};

/// Witnesses y·m − x·n = 1 for the (m, n) they were produced for.
struct BezoutPair {
  Integer y;
  Integer x;
  friend bool operator==(const BezoutPair&, const BezoutPair&) = default;
};

struct ExtendedGcd {
  Integer g;
  Integer s;
  Integer t;
};

/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// g = gcd(a, b) and s·a + t·b = g. Throws PreconditionError when a = b = 0.
ExtendedGcd egcd(const Integer& a, const Integer& b);

/// The unique y in [1, n−1] with a·y ≡ 1 (mod n). Requires n ≥ 2 and
/// gcd(a, n) = 1.
Integer mod_inverse(const Integer& a, const Integer& n);

/// Non-negative remainder of a modulo n (n > 0).
Integer mod(const Integer& a, const Integer& n);

/// (y, x) with y·m − x·n = 1, y = m⁻¹ mod n and x = (y·m − 1)/n.
BezoutPair bezout_pair(const Integer& m, const Integer& n);

/// Exact primality. Deterministic Miller–Rabin below 3.3·10²⁴; BPSW above.
bool is_prime(const Integer& n);

/// The `count` smallest primes p ≥ lower_bound that divide no element of
/// `forbidden`, in increasing order.
std::vector<Integer> primes_avoiding(const Integer& lower_bound, std::span<const Integer> forbidden,
                                     std::size_t count);

/// Smallest prime ≥ from.
Integer next_prime(const Integer& from);

/// True iff v lies in the fractional ideal (1/n)ℤ, i.e. n·v is an integer.
bool in_ideal(const Rational& v, const Integer& n);

}  // namespace faithful
