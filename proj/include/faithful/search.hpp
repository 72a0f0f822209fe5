#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "faithful/model.hpp"
#include "faithful/verifier.hpp"

namespace faithful {

struct SearchBudget {
  std::size_t max_length = 1;
  std::uint64_t max_denominator = 1;
  /// Search nodes allowed per length before that length is abandoned.
  std::uint64_t combo_cap = 10'000'000;
};

struct LengthResult {
  std::size_t length = 0;
  /// First faithful decomposition in enumeration order, if any.
  std::optional<Decomposition> found;
  /// True iff the whole bounded space for this length was scanned (or a
  /// witness was found).
  bool exhausted = false;
  std::uint64_t nodes = 0;
  /// Exact-sum candidates handed to the verifier.
  std::uint64_t candidates = 0;
};

struct SearchResult {
  std::vector<LengthResult> lengths;
  bool all_exhausted() const;
};

/// For each length 1..max_length, enumerates decompositions of m/n into
/// that many terms with distinct denominators ≤ max_denominator. Terms that
/// cannot appear in a faithful decomposition (b | n or a·(b, n) ≥ b) are
/// never generated. Denominator sets are walked in colex order, numerators
/// by backtracking with exact bounds on the remaining sum.
SearchResult min_length_search(const Integer& m, const Integer& n, const SearchBudget& budget,
                               const VerifyOptions& verify_options = {});

enum class ShapeFilter {
  prop7_outputs,  // the three-term outputs of prop7()
  general,        // every valid (y₂, y, x) within the bounds
};

struct Prop6ScanConfig {
  Integer m_min = 3;
  Integer m_max = 3;
  Integer n_min = 1;
  Integer n_max = 1;
  ShapeFilter filter = ShapeFilter::prop7_outputs;
  /// Bounds for ShapeFilter::general: 2 ≤ y₂ ≤ y_max, 1 ≤ y ≤ y_max,
  /// 1 ≤ x ≤ 2·y.
  Integer y_max = 20;
};

struct Prop6Instance {
  Integer m, n, y2, y, x;
  Decomposition decomposition;
  bool condition = false;
  FaithfulnessReport oracle;
  bool agrees() const { return condition == oracle.faithful; }
};

/// Evaluates prop6_condition and the verifier on one instance.
Prop6Instance prop6_check(const Integer& m, const Integer& n, const Integer& y2, const Integer& y, const Integer& x,
                          const VerifyOptions& verify_options = {});

struct Prop6ScanResult {
  std::vector<Prop6Instance> discrepancies;
  std::uint64_t instances_checked = 0;
};

/// Compares prop6_condition against the verifier on every instance selected
/// by the filter; returns the disagreements.
Prop6ScanResult prop6_discrepancy_scan(const Prop6ScanConfig& config, const VerifyOptions& verify_options = {});

}  // namespace faithful
