#include "faithful/numeric.hpp"

#include <array>
#include <cstdint>

#include "faithful/error.hpp"

namespace faithful {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

constexpr std::array<unsigned, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Strong probable-prime test to every base in kWitnesses[0..12) is
// deterministic for all 64-bit n.
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (unsigned p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 43 * 43) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::size_t i = 0; i < 12; ++i) {
    u64 x = pow_mod(kWitnesses[i], d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool strong_probable_prime(const Integer& n, unsigned base, const Integer& d, unsigned long s) {
  const Integer n_minus_1 = n - 1;
  Integer x;
  const Integer b = base;
  mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

// Smallest strong pseudoprime to all 13 prime bases up to 41; below it
// those bases decide primality (Sorenson & Webster).
const Integer& mr13_bound() {
  static const Integer bound("3317044064679887385961981");
  return bound;
}

}  // namespace

Integer parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw PreconditionError("not an integer: \"" + text + "\"");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw PreconditionError("not an integer: \"" + text + "\"");
  }
  return Integer(text, 10);
}

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
  if (den == 0) throw PreconditionError("zero denominator");
  q_.canonicalize();
}

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw PreconditionError("division by zero");
  q_ /= rhs.q_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.q_, b.q_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer Rational::floor() const {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::size_t IntegerHash::operator()(const Integer& z) const {
  // Low limb mixed with size and sign is enough for hashing residues.
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(p->_mp_size);
  if (p->_mp_size != 0) h ^= static_cast<std::size_t>(p->_mp_d[0]) * 0x9E3779B97F4A7C15ull;
  return h;
}

std::size_t RationalHash::operator()(const Rational& r) const {
  IntegerHash h;
  return h(r.num()) * 31 + h(r.den());
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

ExtendedGcd egcd(const Integer& a, const Integer& b) {
  if (a == 0 && b == 0) throw PreconditionError("egcd(0, 0) is undefined");
  ExtendedGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer mod(const Integer& a, const Integer& n) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer mod_inverse(const Integer& a, const Integer& n) {
  if (n < 2) throw PreconditionError("mod_inverse: modulus must be at least 2");
  Integer y;
  if (mpz_invert(y.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0) {
    throw PreconditionError("mod_inverse: " + a.get_str() + " is not invertible modulo " +
                            n.get_str());
  }
  return y;
}

BezoutPair bezout_pair(const Integer& m, const Integer& n) {
  BezoutPair p;
  p.y = mod_inverse(m, n);
  Integer numerator = p.y * m - 1;
  mpz_divexact(p.x.get_mpz_t(), numerator.get_mpz_t(), n.get_mpz_t());
  return p;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime_u64(n.get_ui());
  if (n >= mr13_bound()) return mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;
  for (unsigned p : kWitnesses) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (unsigned base : kWitnesses) {
    if (!strong_probable_prime(n, base, d, s)) return false;
  }
  return true;
}

Integer next_prime(const Integer& from) {
  Integer p = from < 2 ? Integer(2) : from;
  while (!is_prime(p)) ++p;
  return p;
}

std::vector<Integer> primes_avoiding(const Integer& lower_bound, std::span<const Integer> forbidden,
                                     std::size_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  Integer p = lower_bound;
  while (out.size() < count) {
    p = next_prime(p);
    bool ok = true;
    for (const Integer& f : forbidden) {
      if (f != 0 && mpz_divisible_p(f.get_mpz_t(), p.get_mpz_t())) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(p);
    ++p;
  }
  return out;
}

bool in_ideal(const Rational& v, const Integer& n) {
  return mpz_divisible_p(n.get_mpz_t(), v.den().get_mpz_t()) != 0;
}

}  // namespace faithful
