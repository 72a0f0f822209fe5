#pragma once

#include <algorithm>
#include <initializer_list>
#include <random>
#include <utility>

#include "faithful/construct.hpp"
#include "faithful/model.hpp"
#include "faithful/verifier.hpp"

namespace testing_support {

using faithful::Decomposition;
using faithful::Integer;
using faithful::Rational;
using faithful::Term;

// Target is the exact sum of the given terms.
inline Decomposition sum_of(std::initializer_list<std::pair<long, long>> terms) {
  Decomposition d;
  Rational total(0);
  for (auto [a, b] : terms) {
    d.terms.push_back({Integer(a), Integer(b)});
    total += Rational(Integer(a), Integer(b));
  }
  d.target = total;
  return d;
}

inline Decomposition with_target(long m, long n, std::initializer_list<std::pair<long, long>> terms) {
  Decomposition d;
  d.target = Rational(Integer(m), Integer(n));
  for (auto [a, b] : terms) d.terms.push_back({Integer(a), Integer(b)});
  return d;
}

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Terms with small numerators over distinct denominators; the target is
// whatever they sum to. Mostly unfaithful.
inline Decomposition random_free(std::mt19937_64& rng) {
  Decomposition d;
  const long t = uniform(rng, 2, 5);
  std::vector<long> used;
  while (static_cast<long>(used.size()) < t) {
    const long b = uniform(rng, 2, 48);
    if (std::find(used.begin(), used.end(), b) == used.end()) used.push_back(b);
  }
  Rational total(0);
  for (long b : used) {
    const long a = uniform(rng, 1, std::min(b, 5L));
    d.terms.push_back({Integer(a), Integer(b)});
    total += Rational(Integer(a), Integer(b));
  }
  d.target = total;
  return d;
}

// Output of one of the constructions on a random small input. Mostly
// faithful.
inline Decomposition random_constructed(std::mt19937_64& rng) {
  using namespace faithful;
  while (true) {
    const long kind = uniform(rng, 0, 4);
    const long n = uniform(rng, 2, 40);
    const long m = uniform(rng, 1, 3 * n);
    if (gcd(Integer(m), Integer(n)) != 1) continue;
    try {
      switch (kind) {
        case 0:
          if (m >= 2 && m < n) return two_term(m, n);
          break;
        case 1:
          if (n % 2 == 1 && n >= 5) return theorem4(n).decomposition;
          break;
        case 2:
          if (m >= 3 && n > m) return prop7(m, n).decomposition;
          break;
        case 3: {
          OmegaSet omega;
          if (uniform(rng, 0, 1)) omega.insert(Integer(uniform(rng, 2, 12)));
          if (m < 2 * n) return general_coprime(m, n, NumeratorPolicy::unit, omega).decomposition;
          break;
        }
        default:
          if (m >= 2 * n) return theorem1(m, n).decomposition;
          break;
      }
    } catch (const std::exception&) {
    }
  }
}

inline Decomposition random_decomposition(std::mt19937_64& rng) {
  return uniform(rng, 0, 2) == 0 ? random_free(rng) : random_constructed(rng);
}

}  // namespace testing_support
