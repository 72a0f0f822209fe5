#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "faithful/model.hpp"
#include "faithful/numeric.hpp"

namespace faithful {

/// Finite set of positive integers every chosen denominator must be coprime to.
using OmegaSet = std::set<Integer>;

enum class Prop7Case { case1, case2 };

std::string to_string(Prop7Case c);

/// How a constructed decomposition was obtained, for reproducibility.
struct ConstructionTrace {
  /// Primes chosen as denominators, in selection order.
  std::vector<Integer> primes_used;
  /// Values the primes were required not to divide.
  std::vector<Integer> forbidden;
  std::optional<BezoutPair> bezout;
  /// Progression candidates b = y₀ + a₀·N examined before one was accepted.
  std::uint64_t progression_steps = 0;
  std::optional<Prop7Case> branch;
  std::optional<Integer> r;
  std::optional<Integer> applied_scaling;
  /// Name of the special case taken, if any ("n=9", "n=15", …).
  std::optional<std::string> special_case;
};

struct Constructed {
  Decomposition decomposition;
  ConstructionTrace trace;
};

/// m/n = x/y + 1/(n·y) with y·m − x·n = 1. Requires gcd(m, n) = 1 and
/// 2 ≤ m < n.
Decomposition two_term(const Integer& m, const Integer& n);

/// 1 = Σ 1/d over the divisors d ≠ 1 of a perfect number P.
Decomposition from_perfect(const Integer& perfect);

/// Length ⌊m/n⌋ + 2 decomposition Σ (p_i − 1)/p_i + x/y + 1/(n·Πp_i·y),
/// using the smallest admissible primes. Requires 2 ≤ ⌊m/n⌋.
Constructed theorem1(const Integer& m, const Integer& n);

enum class NumeratorPolicy {
  unit,  // a_i = 1
  max,   // a_i = b_i − 1
};

/// Custom numerator choice: given the prime denominator b and the value still
/// to be covered (≥ 1), return a_i. Must satisfy 1 ≤ a_i < b.
using NumeratorRule = std::function<Integer(const Integer& den, const Rational& remaining)>;

struct CoprimeOptions {
  /// Skips this many admissible primes and this many acceptable progression
  /// candidates; distinct seeds give distinct decompositions.
  std::uint64_t seed = 0;
  /// Greedy prime terms allowed before giving up with CapExceededError.
  std::size_t max_terms = 5000;
  /// Progression candidates allowed before giving up.
  std::uint64_t max_progression_steps = 10'000'000;
};

/// m/n = Σ a_i/b_i + x/b + 1/(n·Πb_i·b) with b_i distinct primes prime to n
/// and omega, chosen greedily until the remainder drops below 1, and b found
/// on the progression y₀ + a₀·n·Πb_i coprime to every b_i and omega.
Constructed general_coprime(const Integer& m, const Integer& n, const NumeratorRule& rule, const OmegaSet& omega,
                            const CoprimeOptions& options = {});
Constructed general_coprime(const Integer& m, const Integer& n, NumeratorPolicy policy, const OmegaSet& omega,
                            const CoprimeOptions& options = {});

/// general_coprime with unit numerators: all terms are unit fractions except
/// x/b.
Constructed all_units_but_one(const Integer& m, const Integer& n, const OmegaSet& omega,
                              const CoprimeOptions& options = {});

/// Faithfulness predicate for m/n = 1/y₂ + 1/y₁ + x/(y·n), where y₁ is the
/// unit fraction left over. x ≥ y gives false at once; otherwise throws
/// PreconditionError when the arguments do not have that shape or
/// gcd(y, y₂) ≠ 1.
bool prop6_condition(const Integer& m, const Integer& n, const Integer& y2, const Integer& y, const Integer& x);

struct Prop7Result {
  Decomposition decomposition;
  bool predicted_faithful = false;
  ConstructionTrace trace;
  /// The (y₂, y, x) of the three-term shape 1/y₂ + 1/(y₂·y) + x/(y·n).
  Integer y2;
  Integer y;
  Integer x;
};

/// Three-term decomposition of m/n for m ≥ 3, gcd(m, n) = 1, n > m, with the
/// closed-form faithfulness prediction.
Prop7Result prop7(const Integer& m, const Integer& n);

/// 4/n = 1/x + 1/y + r/z with r ∈ {1, 2}, faithful, for odd n ≥ 5.
Constructed theorem4(const Integer& n);

}  // namespace faithful
