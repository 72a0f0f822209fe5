#include <doctest.h>

#include <random>

#include "faithful/construct.hpp"
#include "faithful/partition.hpp"
#include "faithful/verifier.hpp"
#include "support.hpp"

using namespace faithful;
using namespace testing_support;

namespace {

constexpr long kSmallLattice = 100'000;

}  // namespace

TEST_CASE("fast paths agree with the oracle on small lattices") {
  std::mt19937_64 rng(11);
  int compared = 0;
  for (int i = 0; i < 400; ++i) {
    const Decomposition d = random_decomposition(rng);
    if (lattice_size(d) > kSmallLattice) continue;
    ++compared;
    CAPTURE(to_string(d));
    const FaithfulnessReport oracle = verify_naive(d);
    for (auto method : {std::optional<VerifyMethod>{}, std::optional{VerifyMethod::congruence},
                        std::optional{VerifyMethod::meet_in_middle}}) {
      VerifyOptions o;
      o.method = method;
      const FaithfulnessReport fast = verify(d, o);
      CHECK(fast.faithful == oracle.faithful);
      CHECK(fast.violation == oracle.violation);
    }
    CHECK((partial_sums_in_ideal(d).size() == 2) == oracle.faithful);
  }
  CHECK(compared > 300);
}

TEST_CASE("scaling preserves faithfulness") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 150; ++i) {
    const Decomposition d = random_constructed(rng);
    if (!verify(d).faithful) continue;
    const long c = uniform(rng, 2, 10);
    const Decomposition s = scale(d, c);
    CAPTURE(to_string(d));
    CAPTURE(c);
    CHECK(is_valid(s));
    CHECK(verify(s).faithful);
  }
}

TEST_CASE("faithful decompositions meet the necessary conditions") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const Decomposition d = random_decomposition(rng);
    CAPTURE(to_string(d));
    if (verify(d).faithful) CHECK_FALSE(necessary_conditions(d).certifies_unfaithful());
  }
}

TEST_CASE("pruned candidates are unfaithful under the oracle") {
  std::mt19937_64 rng(14);
  int pruned = 0;
  for (int i = 0; i < 600; ++i) {
    const Decomposition d = random_free(rng);
    if (!necessary_conditions(d).certifies_unfaithful()) continue;
    ++pruned;
    CAPTURE(to_string(d));
    CHECK_FALSE(verify_naive(d).faithful);
  }
  CHECK(pruned > 50);
}

TEST_CASE("coprime shape implies faithful") {
  std::mt19937_64 rng(15);
  int shaped = 0;
  for (int i = 0; i < 300; ++i) {
    const Decomposition d = random_constructed(rng);
    if (!coprime_shape(d)) continue;
    ++shaped;
    CAPTURE(to_string(d));
    CHECK(verify(d).faithful);
    if (lattice_size(d) <= kSmallLattice) CHECK(verify_naive(d).faithful);
  }
  CHECK(shaped > 20);
}

TEST_CASE("constructions are deterministic") {
  std::mt19937_64 a(16), b(16);
  for (int i = 0; i < 50; ++i) CHECK(random_constructed(a) == random_constructed(b));
  CHECK(decompose_partition({6, {1, 2, 3}}, 11).combined == decompose_partition({6, {1, 2, 3}}, 11).combined);
}

TEST_CASE("different seeds give different faithful decompositions") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    const long n = uniform(rng, 2, 30);
    const long m = uniform(rng, 1, 2 * n);
    if (gcd(Integer(m), Integer(n)) != 1) continue;
    std::vector<Decomposition> seen;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      CoprimeOptions o;
      o.seed = seed;
      const Decomposition d = all_units_but_one(m, n, {}, o).decomposition;
      CHECK(verify(d).faithful);
      for (const auto& prev : seen) CHECK(prev != d);
      seen.push_back(d);
    }
  }
}
