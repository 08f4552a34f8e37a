#include <random>

#include "doctest.h"
#include "permchar/cycle_notation.hpp"
#include "permchar/error.hpp"
#include "permchar/permutation.hpp"
#include "test_support.hpp"

using namespace permchar;
using test::cyc;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("perm_from_images") {
  CHECK(perm_from_images({0, 1, 2}) == Permutation::identity(3));
  CHECK(perm_from_images({0, 1, 2}).is_identity());

  const Permutation four = perm_from_images({1, 2, 3, 0});
  CHECK(four(0) == 1);
  CHECK(four(1) == 2);
  CHECK(four(2) == 3);
  CHECK(four(3) == 0);

  CHECK(code_of([] { perm_from_images({0, 0, 1}); }) == ErrorCode::NotABijection);
  CHECK(code_of([] { perm_from_images({0, 3, 1}); }) == ErrorCode::NotABijection);
  CHECK(code_of([] { perm_from_images({}); }) == ErrorCode::NotABijection);
}

TEST_CASE("perm_from_cycles") {
  CHECK(cyc("(1 2 3 4)", 4) == perm_from_images({1, 2, 3, 0}));
  CHECK(cyc("()", 4) == Permutation::identity(4));
  CHECK(cyc("(1 3)(2 4)", 4) == perm_from_images({2, 3, 0, 1}));

  SUBCASE("points not mentioned are fixed") { CHECK(cyc("(2 3)", 5) == perm_from_images({0, 2, 1, 3, 4})); }
  SUBCASE("juxtaposed cycles multiply left to right") {
    // (1 2) then (1 3): 1->2, 2->1->3, 3->1
    CHECK(cyc("(1 2)(1 3)", 3) == perm_from_images({1, 2, 0}));
  }
  SUBCASE("commas and extra whitespace") { CHECK(cyc("  ( 1, 2 ,3 ) ", 3) == cyc("(1 2 3)", 3)); }
  SUBCASE("singleton cycles") { CHECK(cyc("(2)", 3).is_identity()); }

  SUBCASE("errors") {
    CHECK(code_of([] { cyc("(1 2", 4); }) == ErrorCode::ParseError);
    CHECK(code_of([] { cyc("1 2)", 4); }) == ErrorCode::ParseError);
    CHECK(code_of([] { cyc("(1 (2))", 4); }) == ErrorCode::ParseError);
    CHECK(code_of([] { cyc("(1 a)", 4); }) == ErrorCode::ParseError);
    CHECK(code_of([] { cyc("", 4); }) == ErrorCode::ParseError);
    CHECK(code_of([] { cyc("(1 5)", 4); }) == ErrorCode::PointOutOfRange);
    CHECK(code_of([] { cyc("(1 99999999999999)", 4); }) == ErrorCode::PointOutOfRange);
    CHECK(code_of([] { cyc("(0 1)", 4); }) == ErrorCode::NonPositivePoint);
    CHECK(code_of([] { cyc("(-1 2)", 4); }) == ErrorCode::NonPositivePoint);
    CHECK(code_of([] { cyc("(1 2 1)", 4); }) == ErrorCode::RepeatedPoint);
  }
}

TEST_CASE("compose applies the left factor first") {
  const Permutation x = cyc("(1 2 3 4)", 4);
  CHECK(compose(Permutation::identity(4), x) == x);
  CHECK(compose(x, x) == cyc("(1 3)(2 4)", 4));
  CHECK(compose(x, inverse(x)).is_identity());

  const Permutation a = cyc("(1 2)", 3);
  const Permutation b = cyc("(1 3)", 3);
  CHECK(compose(a, b) == cyc("(1 2)(1 3)", 3));
  CHECK(compose(a, b) != compose(b, a));

  CHECK(code_of([] { compose(Permutation::identity(3), Permutation::identity(4)); }) == ErrorCode::DegreeMismatch);
}

TEST_CASE("inverse") {
  CHECK(inverse(Permutation::identity(5)) == Permutation::identity(5));
  CHECK(inverse(cyc("(1 2 3 4)", 4)) == cyc("(1 4 3 2)", 4));
  CHECK(inverse(cyc("(1 3)(2 4)", 4)) == cyc("(1 3)(2 4)", 4));
}

TEST_CASE("to_cycle_string is canonical") {
  CHECK(to_cycle_string(Permutation::identity(3)) == "()");
  CHECK(to_cycle_string(cyc("(3 1)(4 2)", 4)) == "(1 3)(2 4)");
  CHECK(to_cycle_string(cyc("(2 3 1)", 3)) == "(1 2 3)");
  CHECK(to_cycle_string(cyc("(1 4 3 2)", 4)) == "(1 4 3 2)");
}

TEST_CASE("element order and ordering") {
  CHECK(cyc("(1 2 3)(4 5)", 5).element_order() == 6);
  CHECK(Permutation::identity(4).element_order() == 1);
  CHECK(Permutation::identity(4) < cyc("(3 4)", 4));
  CHECK(cyc("(3 4)", 4) < cyc("(1 2)", 4));
}

TEST_CASE("random permutations: group laws and cycle round trip") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const Permutation p = test::random_permutation(n, rng);
    const Permutation q = test::random_permutation(n, rng);
    const Permutation r = test::random_permutation(n, rng);
    CHECK(compose(p, inverse(p)) == Permutation::identity(n));
    CHECK(compose(inverse(p), p) == Permutation::identity(n));
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    CHECK(inverse(compose(p, q)) == compose(inverse(q), inverse(p)));
    CHECK(perm_from_cycles(to_cycle_string(p), n) == p);
    for (Point i = 0; i < n; ++i) CHECK(compose(p, q)(i) == q(p(i)));
    CHECK(test::raw(compose(p, q)) == oracle::mul(test::raw(p), test::raw(q)));
  }
}
