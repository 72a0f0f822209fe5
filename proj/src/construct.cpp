#include "faithful/construct.hpp"

#include <algorithm>
#include <map>

#include "faithful/error.hpp"

namespace faithful {

std::string to_string(Prop7Case c) { return c == Prop7Case::case1 ? "case1" : "case2"; }

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

void ensure(bool condition, const std::string& message) {
  if (!condition) throw ConstructionError(message);
}

Integer exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool divides(const Integer& d, const Integer& value) {
  return mpz_divisible_p(value.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Prime factorisation by trial division; the cofactor is tested for
// primality at every step so prime-heavy inputs (like even perfect numbers)
// finish immediately.
std::map<Integer, unsigned> factorize(Integer value) {
  constexpr unsigned long kTrialLimit = 10'000'000;
  std::map<Integer, unsigned> factors;
  for (unsigned long p = 2; value > 1; p = (p == 2 ? 3 : p + 2)) {
    if (is_prime(value)) {
      ++factors[value];
      break;
    }
    if (p > kTrialLimit) throw PreconditionError("cannot factor " + value.get_str() + " by trial division");
    while (mpz_divisible_ui_p(value.get_mpz_t(), p)) {
      ++factors[Integer(p)];
      mpz_divexact_ui(value.get_mpz_t(), value.get_mpz_t(), p);
    }
  }
  return factors;
}

std::vector<Integer> divisors(const Integer& value) {
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factorize(value)) {
    const std::size_t existing = out.size();
    Integer power = 1;
    for (unsigned k = 0; k < e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Decomposition make(const Integer& m, const Integer& n, std::vector<Term> terms) {
  return Decomposition{Rational(m, n), std::move(terms)};
}

}  // namespace

Decomposition two_term(const Integer& m, const Integer& n) {
  require(m >= 1 && n >= 1, "two_term: m and n must be positive");
  require(gcd(m, n) == 1, "two_term: m/n must be irreducible");
  require(m < n, "two_term: m/n must be a proper fraction");
  require(m != 1, "two_term: m/n is already a unit fraction");
  const BezoutPair bz = bezout_pair(m, n);
  ensure(bz.x >= 1 && bz.x < bz.y, "two_term: Bezout pair out of range");
  return make(m, n, {{bz.x, bz.y}, {1, n * bz.y}});
}

Decomposition from_perfect(const Integer& perfect) {
  require(perfect >= 2, "from_perfect: " + perfect.get_str() + " is not a perfect number");
  const auto divs = divisors(perfect);
  Integer sigma = 0;
  for (const Integer& d : divs) sigma += d;
  require(sigma == 2 * perfect, "from_perfect: " + perfect.get_str() + " is not a perfect number");
  std::vector<Term> terms;
  for (std::size_t i = 1; i < divs.size(); ++i) terms.push_back({1, divs[i]});
  return make(1, 1, std::move(terms));
}

Constructed theorem1(const Integer& m, const Integer& n) {
  require(m >= 1 && n >= 1, "theorem1: m and n must be positive");
  require(gcd(m, n) == 1, "theorem1: m/n must be irreducible");
  const Rational target(m, n);
  const Integer t = target.floor();
  require(t >= 2, "theorem1: needs floor(m/n) >= 2, got " + t.get_str());
  const std::size_t count = t.get_ui();

  // p_1 > t·n/(n − m + t·n) makes Σ 1/p_i < t + 1 − m/n.
  const Rational bound(t * n, n - m + t * n);
  Constructed out;
  out.trace.forbidden = {n};
  out.trace.primes_used = primes_avoiding(bound.floor() + 1, out.trace.forbidden, count);

  Rational reciprocal_sum;
  Integer prime_product = 1;
  for (const Integer& p : out.trace.primes_used) {
    reciprocal_sum += Rational(1, p);
    prime_product *= p;
  }
  ensure(reciprocal_sum < Rational(t + 1) - target, "theorem1: prime bound did not leave room");

  const Rational residual = target - Rational(t) + reciprocal_sum;
  const Integer modulus = n * prime_product;
  ensure(residual.sign() > 0 && residual < Rational(1), "theorem1: residual outside (0, 1)");
  ensure(residual.den() == modulus, "theorem1: residual numerator not coprime to n·Πp");
  ensure(residual.num() > 1, "theorem1: residual is a unit fraction");

  const BezoutPair bz = bezout_pair(residual.num(), modulus);
  out.trace.bezout = bz;
  std::vector<Term> terms;
  for (const Integer& p : out.trace.primes_used) terms.push_back({p - 1, p});
  terms.push_back({bz.x, bz.y});
  terms.push_back({1, modulus * bz.y});
  out.decomposition = make(m, n, std::move(terms));
  return out;
}

Constructed general_coprime(const Integer& m, const Integer& n, const NumeratorRule& rule, const OmegaSet& omega,
                            const CoprimeOptions& options) {
  require(m >= 1 && n >= 1, "general_coprime: m and n must be positive");
  require(gcd(m, n) == 1, "general_coprime: m/n must be irreducible");
  for (const Integer& w : omega) require(w >= 1, "general_coprime: omega values must be positive");

  Constructed out;
  out.trace.forbidden.push_back(n);
  out.trace.forbidden.insert(out.trace.forbidden.end(), omega.begin(), omega.end());

  auto admissible = [&](const Integer& p) {
    return std::none_of(out.trace.forbidden.begin(), out.trace.forbidden.end(),
                        [&](const Integer& f) { return divides(p, f); });
  };

  Rational remaining(m, n);
  Integer product = 1;
  std::vector<Term> terms;
  Integer p = 2;
  for (std::uint64_t skipped = 0; skipped < options.seed; ++p) {
    p = next_prime(p);
    if (admissible(p)) ++skipped;
  }
  while (remaining >= Rational(1)) {
    if (terms.size() >= options.max_terms) {
      throw CapExceededError("general_coprime: " + Rational(m, n).str() + " still needs more than " +
                             std::to_string(options.max_terms) + " prime terms (remaining " + remaining.str() + ")");
    }
    p = next_prime(p);
    if (!admissible(p)) {
      ++p;
      continue;
    }
    const Integer a = rule(p, remaining);
    require(a >= 1 && a < p, "general_coprime: numerator policy produced improper term " + a.get_str() + "/" +
                                 p.get_str());
    Rational after = remaining - Rational(a, p);
    require(after.sign() > 0, "general_coprime: numerator policy overshoots the target at " + a.get_str() + "/" +
                                  p.get_str());
    terms.push_back({a, p});
    out.trace.primes_used.push_back(p);
    product *= p;
    remaining = std::move(after);
    ++p;
  }

  const Integer modulus = n * product;
  ensure(remaining.den() == modulus, "general_coprime: remainder numerator not coprime to n·Πb");
  const Integer& z = remaining.num();
  // modulus ≥ 2 here: modulus = 1 would need n = 1 and no terms, but then
  // the remainder is the integer m ≥ 1.
  const BezoutPair bz = bezout_pair(z, modulus);
  out.trace.bezout = bz;

  // Seed s also passes over the first s acceptable candidates, so distinct
  // seeds differ even when no prime terms are needed.
  Integer a0 = 0;
  std::uint64_t acceptable = 0;
  while (true) {
    if (out.trace.progression_steps >= options.max_progression_steps) {
      throw CapExceededError("general_coprime: progression search exceeded " +
                             std::to_string(options.max_progression_steps) + " steps");
    }
    ++out.trace.progression_steps;
    const Integer x = bz.x + a0 * z;
    const Integer b = bz.y + a0 * modulus;
    bool ok = x >= 1 && b >= 2;
    for (const Integer& q : out.trace.primes_used) ok = ok && gcd(b, q) == 1;
    for (const Integer& w : omega) ok = ok && gcd(b, w) == 1;
    if (ok && acceptable++ == options.seed) {
      terms.push_back({x, b});
      terms.push_back({1, modulus * b});
      break;
    }
    ++a0;
  }
  out.decomposition = make(m, n, std::move(terms));
  return out;
}

Constructed general_coprime(const Integer& m, const Integer& n, NumeratorPolicy policy, const OmegaSet& omega,
                            const CoprimeOptions& options) {
  if (policy == NumeratorPolicy::unit) {
    return general_coprime(m, n, [](const Integer&, const Rational&) { return Integer(1); }, omega, options);
  }
  return general_coprime(m, n, [](const Integer& b, const Rational&) { return Integer(b - 1); }, omega, options);
}

Constructed all_units_but_one(const Integer& m, const Integer& n, const OmegaSet& omega,
                              const CoprimeOptions& options) {
  return general_coprime(m, n, NumeratorPolicy::unit, omega, options);
}

bool prop6_condition(const Integer& m, const Integer& n, const Integer& y2, const Integer& y, const Integer& x) {
  const std::string shape = "prop6_condition: residual is not a unit fraction: ";
  if (m < 1 || n < 1 || y2 < 1 || y < 1 || x < 1) throw PreconditionError(shape + "arguments must be positive");
  if (gcd(m, n) != 1) throw PreconditionError(shape + "m/n must be irreducible");
  if (gcd(y, y2) != 1) throw PreconditionError(shape + "gcd(y, y2) must be 1");
  // The first clause settles the answer without the rest of the shape.
  if (x >= y) return false;
  const Rational middle = Rational(m, n) - Rational(1, y2) - Rational(x, y * n);
  if (middle.sign() <= 0 || middle.num() != 1) {
    throw PreconditionError(shape + "m/n - 1/y2 - x/(y*n) = " + middle.str() + " is not a positive unit fraction");
  }
  const Integer y1 = middle.den();
  if (y1 == y2 || y1 == y * n || y2 == y * n) throw PreconditionError(shape + "denominators are not distinct");
  // n = m'·y₂ for some 0 < m' < m  ⇔  y₂ | n and n/y₂ < m.
  const bool hits_ideal = divides(y2, n) && exact_div(n, y2) < m;
  return !hits_ideal;
}

Prop7Result prop7(const Integer& m, const Integer& n) {
  require(m >= 3, "prop7: needs m >= 3");
  require(n > m, "prop7: needs n > m");
  require(gcd(m, n) == 1, "prop7: m/n must be irreducible");

  Prop7Result out;
  const Integer r = mod(-2 * n, m);
  ensure(r > 0 && r < m, "prop7: r outside (0, m)");
  const Integer s = 2 * n + r;
  const Integer two_m = 2 * m;
  const Integer s_mod = mod(s, two_m);
  out.trace.r = r;

  Integer exclusion_offset;
  if (s_mod == m) {
    out.trace.branch = Prop7Case::case1;
    out.y2 = exact_div(s + m, two_m);
    out.y = exact_div(s, m);
    out.x = r;
    exclusion_offset = r + m;
  } else {
    ensure(s_mod == 0, "prop7: 2n + r is not a multiple of m");
    ensure(r % 2 == 0, "prop7: case 2 needs even r");
    out.trace.branch = Prop7Case::case2;
    out.y2 = exact_div(s + two_m, two_m);
    out.y = exact_div(s, two_m);
    out.x = r / 2;
    exclusion_offset = r + two_m;
  }
  out.decomposition = make(m, n, {{1, out.y2}, {1, out.y2 * out.y}, {out.x, out.y * n}});

  bool predicted = 2 * n > r * (m - 1);
  // Exclusions n = m'·offset/(2(m − m')) over m/2 < m' < m (case 1) or
  // 2m/5 < m' < m (case 2).
  for (Integer mp = 1; predicted && mp < m; ++mp) {
    const bool in_range = out.trace.branch == Prop7Case::case1 ? 2 * mp > m : 5 * mp > 2 * m;
    if (!in_range) continue;
    if (Rational(mp * exclusion_offset, 2 * (m - mp)) == Rational(n)) predicted = false;
  }
  out.predicted_faithful = predicted;
  return out;
}

Constructed theorem4(const Integer& n) {
  require(n >= 5, "theorem4: needs n >= 5");
  require(n % 2 != 0, "theorem4: needs odd n");
  Constructed out;
  if (n == 9) {
    out.trace.special_case = "n=9";
    out.decomposition = make(4, 9, {{1, 4}, {1, 6}, {1, 36}});
    return out;
  }
  if (n == 15) {
    Constructed base = theorem4(5);
    out.decomposition = scale(base.decomposition, 3);
    out.trace = base.trace;
    out.trace.applied_scaling = Integer(3);
    out.trace.special_case = "n=15";
    return out;
  }
  // trace.r is the numerator of the non-unit term in 4/n = 1/x + 1/y + r/z.
  if (n % 4 == 1) {
    const Integer x = (n + 3) / 4;
    const Integer half = (n + 1) / 2;
    out.trace.branch = Prop7Case::case1;
    out.trace.r = Integer(2);
    out.decomposition = make(4, n, {{1, x}, {1, x * half}, {2, half * n}});
  } else {
    const Integer x = (n + 5) / 4;
    const Integer quarter = (n + 1) / 4;
    out.trace.branch = Prop7Case::case2;
    out.trace.r = Integer(1);
    out.decomposition = make(4, n, {{1, x}, {1, x * quarter}, {1, quarter * n}});
  }
  return out;
}

}  // namespace faithful
