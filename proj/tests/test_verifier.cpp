#include <doctest.h>

#include "faithful/construct.hpp"
#include "faithful/error.hpp"
#include "faithful/verifier.hpp"
#include "support.hpp"

using namespace faithful;
using testing_support::with_target;

namespace {

VerifyOptions forced(VerifyMethod m) {
  VerifyOptions o;
  o.method = m;
  return o;
}

}  // namespace

TEST_CASE("verify_naive on the worked examples") {
  auto r = verify_naive(with_target(4, 9, {{1, 4}, {1, 6}, {1, 36}}));
  CHECK(r.faithful);
  CHECK(r.combos_examined == 8);
  CHECK(r.method == VerifyMethod::naive);

  r = verify_naive(with_target(4, 9, {{1, 3}, {1, 15}, {2, 45}}));
  CHECK_FALSE(r.faithful);
  REQUIRE(r.violation);
  CHECK(r.violation->coefficients == std::vector<Integer>{1, 0, 0});
  CHECK(r.violation->value == Rational(1, 3));

  CHECK(verify_naive(with_target(1, 1, {{1, 2}, {1, 3}, {1, 6}})).faithful);

  r = verify_naive(with_target(5, 6, {{1, 2}, {1, 3}}));
  CHECK_FALSE(r.faithful);
  CHECK(r.violation->coefficients == std::vector<Integer>{1, 0});
  CHECK(r.violation->value == Rational(1, 2));
}

TEST_CASE("verify_naive refuses oversized lattices") {
  VerifyOptions small;
  small.cap = 100;
  const Decomposition d = with_target(9, 5, {{1, 2}, {1, 3}, {28, 29}, {1, 870}});
  CHECK(lattice_size(d) == 2 * 2 * 29 * 2);
  CHECK_THROWS_AS(verify_naive(d, small), CapExceededError);
  CHECK_THROWS_AS(verify_naive(with_target(4, 9, {{1, 4}, {1, 4}})), PreconditionError);
}

TEST_CASE("verify uses congruence elimination") {
  auto r = verify(with_target(9, 5, {{1, 2}, {1, 3}, {28, 29}, {1, 870}}));
  CHECK(r.faithful);
  CHECK(r.method == VerifyMethod::congruence);
  CHECK(r.combos_examined < 29);

  CHECK(verify(with_target(4, 5, {{3, 4}, {1, 20}})).faithful);

  r = verify(with_target(5, 6, {{1, 2}, {1, 3}}));
  CHECK_FALSE(r.faithful);
  CHECK(r.violation->coefficients == std::vector<Integer>{1, 0});
  CHECK(r.violation->value == Rational(1, 2));

  r = verify(with_target(4, 9, {{1, 3}, {1, 15}, {2, 45}}));
  CHECK(r.violation->coefficients == std::vector<Integer>{1, 0, 0});
}

TEST_CASE("verify handles huge numerators without enumerating them") {
  const Constructed c = theorem1(Integer(7), Integer(3));
  CHECK(verify(c.decomposition).faithful);
  // (p−1)/p = (p−2)/(p−1) + 1/(p(p−1)): the lattice has about 2·10⁹ points.
  const Integer p("1000000007");
  const Decomposition d = two_term(p - 1, p);
  CHECK(d.terms[0].num == p - 2);
  VerifyOptions o;
  o.cap = 1000;
  const auto r = verify(d, o);
  CHECK(r.faithful);
  CHECK(r.combos_examined <= 1000);
  CHECK_THROWS_AS(verify_naive(d, o), CapExceededError);
}

TEST_CASE("forced methods agree with the oracle") {
  const std::vector<Decomposition> cases = {
      with_target(4, 9, {{1, 4}, {1, 6}, {1, 36}}),
      with_target(4, 9, {{1, 3}, {1, 15}, {2, 45}}),
      with_target(5, 6, {{1, 2}, {1, 3}}),
      with_target(9, 5, {{1, 2}, {1, 3}, {28, 29}, {1, 870}}),
      with_target(1, 1, {{1, 2}, {1, 4}, {1, 7}, {1, 14}, {1, 28}}),
  };
  for (const auto& d : cases) {
    const auto oracle = verify_naive(d);
    for (VerifyMethod m : {VerifyMethod::congruence, VerifyMethod::meet_in_middle}) {
      const auto r = verify(d, forced(m));
      CHECK(r.method == m);
      CHECK(r.faithful == oracle.faithful);
      CHECK(r.violation == oracle.violation);
    }
  }
}

TEST_CASE("partial_sums_in_ideal") {
  CHECK(partial_sums_in_ideal(with_target(4, 9, {{1, 4}, {1, 6}, {1, 36}})) ==
        std::set<Rational>{Rational(0), Rational(4, 9)});
  CHECK(partial_sums_in_ideal(with_target(5, 6, {{1, 2}, {1, 3}})) ==
        std::set<Rational>{Rational(0), Rational(1, 2), Rational(1, 3), Rational(5, 6)});
  CHECK(partial_sums_in_ideal(with_target(0, 1, {})) == std::set<Rational>{Rational(0)});
}

TEST_CASE("method names") {
  CHECK(to_string(VerifyMethod::naive) == "naive");
  CHECK(to_string(VerifyMethod::congruence) == "congruence");
}
