#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "faithful/model.hpp"
#include "faithful/numeric.hpp"

namespace faithful {

enum class VerifyMethod { naive, congruence, meet_in_middle };

std::string to_string(VerifyMethod method);

/// A coefficient vector 0 ≤ x_i ≤ a_i whose value Σ x_i/b_i lies in (1/n)ℤ
/// and is neither 0 nor the target.
struct FaithfulnessViolation {
  std::vector<Integer> coefficients;
  Rational value;
  friend bool operator==(const FaithfulnessViolation&, const FaithfulnessViolation&) = default;
};

struct FaithfulnessReport {
  bool faithful = true;
  /// First violating vector in colex order (x_1 varies fastest), when
  /// unfaithful.
  std::optional<FaithfulnessViolation> violation;
  std::uint64_t combos_examined = 0;
  VerifyMethod method = VerifyMethod::naive;
};

struct VerifyOptions {
  /// Upper bound on enumerated coefficient vectors (or partial vectors for
  /// the fast paths). Exceeding it throws CapExceededError.
  std::uint64_t cap = 10'000'000;
  /// Meet-in-the-middle is considered once more than this many terms must be
  /// enumerated explicitly.
  std::size_t mitm_threshold = 20;
  /// Force a fast-path method; nullopt picks automatically. naive is not
  /// accepted here (use verify_naive).
  std::optional<VerifyMethod> method;
};

/// Enumerates every coefficient vector in colex order with exact
/// rational sums. The independent oracle for verify().
FaithfulnessReport verify_naive(const Decomposition& d, const VerifyOptions& options = {});

/// Same verdict and violation as verify_naive, computed by congruence
/// elimination: the terms are split into an enumerated set and a set whose
/// coefficients are solved in closed form from the residue constraints.
FaithfulnessReport verify(const Decomposition& d, const VerifyOptions& options = {});

/// All lattice values Σ x_i/b_i (0 ≤ x_i ≤ a_i) lying in (1/n)ℤ, including
/// 0 and, for a valid decomposition, the target.
std::set<Rational> partial_sums_in_ideal(const Decomposition& d, const VerifyOptions& options = {});

/// Product of (a_i + 1): the size of the coefficient lattice.
Integer lattice_size(const Decomposition& d);

}  // namespace faithful
