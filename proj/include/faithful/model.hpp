#pragma once

#include <string>
#include <vector>

#include "faithful/numeric.hpp"

namespace faithful {

/// One summand a/b as written. Not reduced: the written denominator b is
/// what distinctness and the coefficient range 0 ≤ x ≤ a refer to.
struct Term {
  Integer num;
  Integer den;

  Rational value() const { return Rational(num, den); }
  friend bool operator==(const Term&, const Term&) = default;
};

/// target = Σ terms, with pairwise distinct written denominators.
struct Decomposition {
  Rational target;
  std::vector<Term> terms;

  std::size_t length() const { return terms.size(); }
  /// Numerator m of the reduced target.
  Integer m() const { return target.num(); }
  /// Denominator n of the reduced target; fixes the ideal (1/n)ℤ.
  Integer n() const { return target.den(); }
  Rational sum() const;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

enum class ViolationKind {
  non_positive_target,
  non_positive_term,
  duplicate_denominator,
  sum_mismatch,
};

struct Violation {
  ViolationKind kind;
  std::string detail;
};

std::string to_string(ViolationKind kind);

/// Every structural problem found; empty means the decomposition is valid.
std::vector<Violation> validate(const Decomposition& d);
bool is_valid(const Decomposition& d);
/// Throws PreconditionError listing the violations, if any.
void require_valid(const Decomposition& d, const char* context);

/// m/(C·n) = Σ a_i/(C·b_i).
Decomposition scale(const Decomposition& d, const Integer& factor);

struct TermStructure {
  bool den_divides_n = false;      // b_i | n
  bool numerator_too_big = false;  // a_i ≥ b_i/(b_i, n)

  bool violated() const { return den_divides_n || numerator_too_big; }
  friend bool operator==(const TermStructure&, const TermStructure&) = default;
};

struct StructureReport {
  std::vector<TermStructure> terms;
  bool pairwise_coprime_shape = false;

  /// True when some term fails a necessary condition; certifies "not
  /// faithful" without enumeration.
  bool certifies_unfaithful() const;
};

/// Per-term necessary conditions for faithfulness (length ≥ 2), plus
/// coprime_shape().
StructureReport necessary_conditions(const Decomposition& d);

/// True iff d = Σ_{i<t} a_i/b_i + 1/(n·b_1⋯b_{t−1}) with every a_i < b_i and
/// n, b_1, …, b_{t−1} pairwise coprime. Sufficient for faithfulness.
bool coprime_shape(const Decomposition& d);

/// "m/n = a1/b1 + a2/b2 + …"
std::string to_string(const Decomposition& d);

}  // namespace faithful
