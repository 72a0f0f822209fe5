#include "faithful/partition.hpp"

#include <algorithm>
#include <functional>

#include "faithful/error.hpp"

namespace faithful {

void require_valid(const PartitionSpec& spec) {
  if (spec.parts.empty()) throw PreconditionError("partition: needs at least one part");
  Integer total = 0;
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    if (spec.parts[i] < 1) throw PreconditionError("partition: parts must be positive");
    if (i > 0 && spec.parts[i] < spec.parts[i - 1]) throw PreconditionError("partition: parts must be non-decreasing");
    total += spec.parts[i];
  }
  if (total != spec.m) {
    throw PreconditionError("partition: parts sum to " + total.get_str() + ", expected " + spec.m.get_str());
  }
}

std::vector<PartitionSpec> integer_partitions(unsigned m) {
  std::vector<PartitionSpec> out;
  std::vector<Integer> current;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned smallest) {
    if (left == 0) {
      out.push_back({Integer(m), current});
      return;
    }
    for (unsigned part = smallest; part <= left; ++part) {
      current.push_back(part);
      rec(left - part, part);
      current.pop_back();
    }
  };
  if (m > 0) rec(m, 1);
  return out;
}

BlockDecomposition decompose_partition(const PartitionSpec& spec, const Integer& n, const PartitionOptions& options) {
  require_valid(spec);
  if (n < 1) throw PreconditionError("partition: n must be positive");
  if (gcd(spec.m, n) != 1) throw PreconditionError("partition: m/n must be irreducible");

  BlockDecomposition out;
  OmegaSet omega{n};
  for (const Integer& part : spec.parts) {
    // A part sharing a factor with n is built on its reduced form; keeping n
    // in omega keeps every prime denominator coprime to n, so the block stays
    // faithful with respect to (1/n)ℤ.
    const Rational value(part, n);
    Constructed block = general_coprime(value.num(), value.den(), options.policy, omega, options.coprime);
    for (const Term& t : block.decomposition.terms) {
      omega.insert(t.den);
      out.combined.terms.push_back(t);
    }
    out.blocks.push_back(std::move(block.decomposition));
    out.traces.push_back(std::move(block.trace));
  }
  out.combined.target = Rational(spec.m, n);
  require_valid(out.combined, "decompose_partition");
  return out;
}

std::set<Rational> s_set(const BlockDecomposition& bd, const Integer& n, const VerifyOptions& options) {
  if (bd.combined.n() != n) throw PreconditionError("s_set: combined target does not have denominator n");
  return partial_sums_in_ideal(bd.combined, options);
}

std::set<Rational> t_set(const PartitionSpec& spec, const Integer& n) {
  if (n < 1) throw PreconditionError("t_set: n must be positive");
  // Subset sums by accumulation; the set never exceeds m + 1 values.
  std::set<Rational> sums{Rational(0)};
  for (const Integer& part : spec.parts) {
    std::set<Rational> next = sums;
    for (const Rational& s : sums) next.insert(s + Rational(part, n));
    sums = std::move(next);
  }
  return sums;
}

PartitionCheck check_partition_theorem(const PartitionSpec& spec, const Integer& n, const PartitionOptions& options,
                                       const VerifyOptions& verify_options) {
  PartitionCheck out;
  out.blocks = decompose_partition(spec, n, options);
  out.s = s_set(out.blocks, n, verify_options);
  out.t = t_set(spec, n);
  out.s_contains_t = std::includes(out.s.begin(), out.s.end(), out.t.begin(), out.t.end());
  out.equal = out.s == out.t;
  return out;
}

}  // namespace faithful
