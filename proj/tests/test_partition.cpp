#include <doctest.h>

#include "faithful/error.hpp"
#include "faithful/partition.hpp"
#include "support.hpp"

using namespace faithful;
using testing_support::with_target;

namespace {

std::set<Rational> over(long n, std::initializer_list<long> nums) {
  std::set<Rational> out;
  for (long a : nums) out.insert(Rational(Integer(a), Integer(n)));
  return out;
}

}  // namespace

TEST_CASE("integer_partitions") {
  CHECK(integer_partitions(1).size() == 1);
  CHECK(integer_partitions(4).size() == 5);
  CHECK(integer_partitions(6).size() == 11);
  const auto p = integer_partitions(3);
  CHECK(p[0].parts == std::vector<Integer>{1, 1, 1});
  CHECK(p[1].parts == std::vector<Integer>{1, 2});
  CHECK(p[2].parts == std::vector<Integer>{3});
}

TEST_CASE("require_valid on partitions") {
  CHECK_NOTHROW(require_valid(PartitionSpec{5, {2, 3}}));
  CHECK_THROWS_AS(require_valid(PartitionSpec{5, {3, 2}}), PreconditionError);
  CHECK_THROWS_AS(require_valid(PartitionSpec{5, {2, 2}}), PreconditionError);
  CHECK_THROWS_AS(require_valid(PartitionSpec{0, {}}), PreconditionError);
}

TEST_CASE("decompose_partition builds blocks left to right") {
  const BlockDecomposition bd = decompose_partition({5, {2, 3}}, 7);
  REQUIRE(bd.blocks.size() == 2);
  CHECK(bd.blocks[0] == with_target(2, 7, {{1, 4}, {1, 28}}));
  CHECK(bd.blocks[1] == with_target(3, 7, {{2, 5}, {1, 35}}));
  CHECK(bd.combined.length() == 4);
  CHECK(is_valid(bd.combined));

  const BlockDecomposition single = decompose_partition({2, {2}}, 3);
  CHECK(single.blocks[0] == all_units_but_one(2, 3, {}).decomposition);

  // The b_ij are every denominator but each block's final 1/(n·Πb) term.
  const BlockDecomposition b = decompose_partition({6, {1, 2, 3}}, 7);
  std::vector<Integer> bij;
  for (const Decomposition& block : b.blocks)
    for (std::size_t j = 0; j + 1 < block.length(); ++j) bij.push_back(block.terms[j].den);
  for (std::size_t i = 0; i < bij.size(); ++i) {
    CHECK(gcd(bij[i], 7) == 1);
    for (std::size_t k = i + 1; k < bij.size(); ++k) CHECK(gcd(bij[i], bij[k]) == 1);
  }

  CHECK_THROWS_AS(decompose_partition({4, {1, 3}}, 6), PreconditionError);
}

TEST_CASE("s_set and t_set") {
  const BlockDecomposition bd = decompose_partition({5, {2, 3}}, 7);
  CHECK(s_set(bd, 7) == over(7, {0, 2, 3, 5}));
  CHECK(s_set(decompose_partition({2, {2}}, 3), 3) == over(3, {0, 2}));
  CHECK(t_set({5, {2, 3}}, 7) == over(7, {0, 2, 3, 5}));
  CHECK(t_set({4, {2, 2}}, 5) == over(5, {0, 2, 4}));
  CHECK(t_set({4, {4}}, 9) == over(9, {0, 4}));
}

TEST_CASE("check_partition_theorem") {
  for (auto [m, parts, n] : std::vector<std::tuple<long, std::vector<Integer>, long>>{
           {5, {2, 3}, 7}, {3, {1, 2}, 4}, {6, {1, 2, 3}, 7}, {4, {1, 3}, 5}, {4, {2, 2}, 3}, {6, {6}, 1}}) {
    CAPTURE(m);
    CAPTURE(n);
    const PartitionCheck c = check_partition_theorem({m, parts}, n);
    CHECK(c.equal);
    CHECK(c.s_contains_t);
  }
}
