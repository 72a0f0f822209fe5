#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "faithful/error.hpp"
#include "faithful/search.hpp"
#include "support.hpp"

using namespace faithful;
using testing_support::with_target;

namespace {

SearchBudget budget(std::size_t length, std::uint64_t den, std::uint64_t cap = 10'000'000) {
  SearchBudget b;
  b.max_length = length;
  b.max_denominator = den;
  b.combo_cap = cap;
  return b;
}

// Independent enumeration: every set of `length` distinct denominators in
// [1, B] visited in a shuffled order, every numerator vector with the exact
// sum, no structural pruning. Returns the number of faithful decompositions.
std::size_t brute_force_faithful(const Rational& target, std::size_t length, long B, std::mt19937_64& rng) {
  std::vector<long> dens(B);
  for (long i = 0; i < B; ++i) dens[i] = i + 1;
  std::shuffle(dens.begin(), dens.end(), rng);
  std::size_t count = 0;
  std::vector<long> pick;
  std::function<void(std::size_t)> sets = [&](std::size_t from) {
    if (pick.size() == length) {
      std::vector<Integer> nums(length, 0);
      std::function<void(std::size_t, Rational)> nums_rec = [&](std::size_t j, Rational left) {
        if (j == length) {
          if (!left.is_zero()) return;
          Decomposition d{target, {}};
          for (std::size_t k = 0; k < length; ++k) d.terms.push_back({nums[k], Integer(pick[k])});
          if (verify_naive(d).faithful) ++count;
          return;
        }
        for (long a = 1; Rational(Integer(a), Integer(pick[j])) <= left; ++a) {
          nums[j] = a;
          nums_rec(j + 1, left - Rational(Integer(a), Integer(pick[j])));
        }
      };
      nums_rec(0, target);
      return;
    }
    for (std::size_t i = from; i < dens.size(); ++i) {
      pick.push_back(dens[i]);
      sets(i + 1);
      pick.pop_back();
    }
  };
  sets(0);
  return count;
}

}  // namespace

TEST_CASE("min_length_search finds nothing short for 7/3") {
  const SearchResult r = min_length_search(7, 3, budget(3, 30));
  REQUIRE(r.lengths.size() == 3);
  for (const auto& l : r.lengths) {
    CHECK_FALSE(l.found);
    CHECK(l.exhausted);
  }
  CHECK(r.all_exhausted());
}

TEST_CASE("min_length_search finds 2/3 = 1/2 + 1/6") {
  const SearchResult r = min_length_search(2, 3, budget(2, 10));
  CHECK_FALSE(r.lengths[0].found);
  REQUIRE(r.lengths[1].found);
  CHECK(*r.lengths[1].found == with_target(2, 3, {{1, 2}, {1, 6}}));
}

TEST_CASE("single terms are allowed at length one") {
  const SearchResult r = min_length_search(1, 7, budget(1, 10));
  REQUIRE(r.lengths[0].found);
  CHECK(*r.lengths[0].found == with_target(1, 7, {{1, 7}}));
}

TEST_CASE("combo_cap flags partial results") {
  const SearchResult r = min_length_search(7, 3, budget(3, 30, 5));
  CHECK_FALSE(r.all_exhausted());
  CHECK_FALSE(r.lengths[2].exhausted);
}

TEST_CASE("min_length_search preconditions") {
  CHECK_THROWS_AS(min_length_search(2, 4, budget(2, 10)), PreconditionError);
  CHECK_THROWS_AS(min_length_search(2, 3, budget(0, 10)), PreconditionError);
}

TEST_CASE("witnesses are faithful and inside the budget") {
  for (long n = 1; n <= 7; ++n)
    for (long m = 1; m <= 2 * n; ++m) {
      if (gcd(m, n) != 1) continue;
      const SearchResult r = min_length_search(m, n, budget(3, 14));
      for (const auto& l : r.lengths) {
        if (!l.found) continue;
        CAPTURE(to_string(*l.found));
        CHECK(is_valid(*l.found));
        CHECK(l.found->length() == l.length);
        CHECK(l.found->target == Rational(m, n));
        CHECK(verify_naive(*l.found).faithful);
        for (const Term& t : l.found->terms) CHECK(t.den <= 14);
      }
    }
}

TEST_CASE("exhausted lengths survive an unpruned shuffled re-enumeration") {
  std::mt19937_64 rng(2024);
  for (auto [m, n, B] : std::vector<std::tuple<long, long, long>>{{7, 3, 16}, {3, 7, 14}, {4, 9, 14}, {5, 4, 12}}) {
    const SearchResult r = min_length_search(m, n, budget(3, B));
    for (const auto& l : r.lengths) {
      CAPTURE(m);
      CAPTURE(n);
      CAPTURE(l.length);
      REQUIRE(l.exhausted);
      const std::size_t brute = brute_force_faithful(Rational(m, n), l.length, B, rng);
      CHECK((brute > 0) == l.found.has_value());
    }
  }
}

TEST_CASE("prop6_check") {
  const Prop6Instance inst = prop6_check(4, 9, 3, 5, 2);
  CHECK_FALSE(inst.condition);
  CHECK_FALSE(inst.oracle.faithful);
  CHECK(inst.oracle.violation->value == Rational(1, 3));
  CHECK(inst.agrees());
  CHECK(inst.decomposition == with_target(4, 9, {{1, 3}, {1, 15}, {2, 45}}));
}

TEST_CASE("three-term condition scan over prop7 outputs is clean") {
  Prop6ScanConfig config;
  config.m_min = 3;
  config.m_max = 5;
  config.n_min = 1;
  config.n_max = 500;
  const Prop6ScanResult r = prop6_discrepancy_scan(config);
  CHECK(r.discrepancies.empty());
  CHECK(r.instances_checked > 900);
}

TEST_CASE("general-shape prop6 scan reports only disagreements") {
  Prop6ScanConfig config;
  config.m_min = 3;
  config.m_max = 5;
  config.n_min = 4;
  config.n_max = 30;
  config.filter = ShapeFilter::general;
  config.y_max = 12;
  const Prop6ScanResult r = prop6_discrepancy_scan(config);
  CHECK(r.instances_checked > 0);
  for (const auto& d : r.discrepancies) CHECK(d.condition != d.oracle.faithful);
  MESSAGE("general-shape instances: " << r.instances_checked << ", discrepancies: " << r.discrepancies.size());
}
