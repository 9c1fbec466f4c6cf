#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torelli/omega.hpp"
#include "torelli/permutation.hpp"

using namespace torelli;

TEST_CASE("identity, composition and inverses") {
  Permutation id(5);
  Permutation swap12 = parse_permutation("(1 2)", 5);
  CHECK(id.compose(swap12) == swap12);
  CHECK(swap12.compose(id) == swap12);
  CHECK(swap12.compose(swap12) == id);

  Permutation cycle = parse_permutation("(1 2 3)", 3);
  CHECK(cycle.inverse() == parse_permutation("(1 3 2)", 3));
  CHECK(cycle.compose(cycle.inverse()) == Permutation(3));

  // apply tau first: (1 2)((2 3)(1)) = 1 -> 1 -> 2
  Permutation tau = parse_permutation("(2 3)", 3);
  Permutation sigma = parse_permutation("(1 2)", 3);
  CHECK(sigma.compose(tau)(1) == 2);
  CHECK(sigma.compose(tau)(2) == 3);
  CHECK(sigma.compose(tau)(3) == 1);

  CHECK_THROWS_AS(sigma.compose(Permutation(4)), DegreeMismatch);
}

TEST_CASE("parsing and formatting") {
  Permutation sigma = parse_permutation("(2 3)(4 5)", 6);
  CHECK(sigma.images() == std::vector<int>{1, 3, 2, 5, 4, 6});
  CHECK(sigma.cycles() == "(2 3)(4 5)");

  // commas and fixed-point cycles are accepted on input
  CHECK(parse_permutation("(1)(2,3)(4,5)(6)", 6) == sigma);
  CHECK(parse_permutation("[1,3,2,5,4,6]", 6) == sigma);

  CHECK(parse_permutation("()", 4) == Permutation(4));
  CHECK(Permutation(4).cycles() == "()");
  CHECK(parse_permutation("[2,1,3]", 3) == parse_permutation("(1 2)", 3));
  CHECK(Permutation(3).one_line() == "[1,2,3]");

  CHECK_THROWS_AS(parse_permutation("(1 7)", 5), OutOfRange);
  CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)", 5), RepeatedEntry);
  CHECK_THROWS_AS(parse_permutation("[1,1,3]", 3), RepeatedEntry);
  CHECK_THROWS_AS(parse_permutation("[1,2]", 3), MalformedInput);
  CHECK_THROWS_AS(parse_permutation("1 2 3", 3), MalformedInput);
  CHECK_THROWS_AS(parse_permutation("(1 2", 3), MalformedInput);
}

TEST_CASE("round trip through both notations") {
  for (const Permutation& sigma : enumerate_group(6)) {
    CHECK(parse_permutation(sigma.cycles(), 6) == sigma);
    CHECK(parse_permutation(sigma.one_line(), 6) == sigma);
  }
}

TEST_CASE("enumeration is lexicographic, complete and duplicate-free") {
  CHECK(enumerate_group(1).size() == 1);
  CHECK(enumerate_group(3).size() == 6);
  CHECK(enumerate_group(5).size() == 120);

  auto all = enumerate_group(8);
  CHECK(all.size() == 40320);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);

  CHECK_THROWS_AS(enumerate_group(9), DegreeTooLarge);
  CHECK(enumerate_group(9, 10).size() == 362880);
}

TEST_CASE("group axioms hold exhaustively up to degree 5") {
  for (int degree : {2, 3, 4, 5}) {
    auto all = enumerate_group(degree);
    Permutation id(degree);
    std::size_t associativity_failures = 0;
    for (const Permutation& a : all) {
      CHECK(a.compose(a.inverse()) == id);
      CHECK(a.inverse().compose(a) == id);
      CHECK(a.compose(id) == a);
      CHECK(id.compose(a) == a);
      for (const Permutation& b : all) {
        Permutation ab = a.compose(b);
        for (const Permutation& c : all)
          if (!(ab.compose(c) == a.compose(b.compose(c)))) ++associativity_failures;
      }
    }
    CHECK(associativity_failures == 0);
  }
}
