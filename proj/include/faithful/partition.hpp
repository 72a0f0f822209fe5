#pragma once

#include <set>
#include <vector>

#include "faithful/construct.hpp"
#include "faithful/model.hpp"
#include "faithful/verifier.hpp"

namespace faithful {

/// m = m_1 + … + m_e with 1 ≤ m_1 ≤ … ≤ m_e.
struct PartitionSpec {
  Integer m;
  std::vector<Integer> parts;
};

/// Throws PreconditionError unless parts are positive, non-decreasing, non-empty
/// and sum to m.
void require_valid(const PartitionSpec& spec);

/// All partitions of m, each non-decreasing, in lexicographic order.
std::vector<PartitionSpec> integer_partitions(unsigned m);

struct BlockDecomposition {
  /// Block i decomposes parts[i]/n.
  std::vector<Decomposition> blocks;
  std::vector<ConstructionTrace> traces;
  /// Concatenation of the blocks; decomposes m/n.
  Decomposition combined;
};

struct PartitionOptions {
  /// Numerators of the greedy prime terms. max keeps blocks short when a part
  /// exceeds n; for parts below n both policies give the same blocks.
  NumeratorPolicy policy = NumeratorPolicy::max;
  CoprimeOptions coprime;
};

/// One faithful block per part, built left to right; every block's
/// denominators avoid n and all denominators of earlier blocks.
BlockDecomposition decompose_partition(const PartitionSpec& spec, const Integer& n,
                                       const PartitionOptions& options = {});

/// Lattice partial sums of the combined decomposition that lie in (1/n)ℤ.
std::set<Rational> s_set(const BlockDecomposition& bd, const Integer& n, const VerifyOptions& options = {});

/// All subset sums of {m_i/n}.
std::set<Rational> t_set(const PartitionSpec& spec, const Integer& n);

struct PartitionCheck {
  bool equal = false;
  /// S ⊇ T, checked on its own.
  bool s_contains_t = false;
  std::set<Rational> s;
  std::set<Rational> t;
  BlockDecomposition blocks;
};

PartitionCheck check_partition_theorem(const PartitionSpec& spec, const Integer& n,
                                       const PartitionOptions& options = {}, const VerifyOptions& verify_options = {});

}  // namespace faithful
