#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <string>

#include "torelli/group.hpp"

using namespace torelli;

namespace {

FactoredMap parse4(const std::string& text) { return FactoredMap::parse(text, 4); }

// exponents in {-1,0,1}, positive sum <= 2, negative sum >= -2, scalar +-1
void check_coordinate_shape(const FactoredMap& f) {
  int positive = 0, negative = 0;
  for (const auto& [factor, exponent] : f.factors()) {
    CHECK(std::abs(exponent) == 1);
    if (exponent > 0)
      positive += exponent;
    else
      negative += exponent;
  }
  CHECK(positive <= 2);
  CHECK(negative >= -2);
  CHECK((f.lambda() == Rational(1) || f.lambda() == Rational(-1)));
}

}  // namespace

TEST_CASE("theta on distinguished permutations") {
  GroupElement id4 = theta(4, Permutation(5));
  CHECK(id4.coords == std::vector<FactoredMap>{parse4("1*z1"), parse4("1*z2")});

  GroupElement swapped = theta(4, parse_permutation("(2 3)(4 5)", 5));
  CHECK(swapped.coords == std::vector<FactoredMap>{parse4("-1*(z2-1)"), parse4("-1*(z1-1)")});

  CHECK_THROWS_AS(theta(4, Permutation(4)), DegreeMismatch);
}

TEST_CASE("standard generators match their closed forms") {
  Generators g3 = standard_generators(3);
  CHECK(g3.A.coords == std::vector<FactoredMap>{FactoredMap::parse("1*z1^-1", 3)});
  CHECK(g3.B.coords == std::vector<FactoredMap>{FactoredMap::parse("1*z1*(z1-1)^-1", 3)});

  Generators g4 = standard_generators(4);
  CHECK(g4.A.coords == std::vector<FactoredMap>{parse4("1*z1^-1"), parse4("1*z2^-1")});
  CHECK(g4.B.coords ==
        std::vector<FactoredMap>{parse4("1*z2*(z2-1)^-1"), parse4("-1*z2*(z1-z2)^-1")});
}

TEST_CASE("inversion of theta via reciprocal coordinates") {
  for (int k = 3; k <= 6; ++k) {
    GroupElement a = theta(k, parse_permutation("(1 2)", k + 1));
    CHECK(a.coords == standard_generators(k).A.coords);
  }
}

TEST_CASE("generators are realized by permutations, discovered by search") {
  for (int k = 3; k <= 6; ++k) {
    Generators gens = standard_generators(k);
    Permutation sigma_a = find_permutation(k, gens.A);
    Permutation sigma_b = find_permutation(k, gens.B);
    CHECK(theta(k, sigma_a).coords == gens.A.coords);
    CHECK(theta(k, sigma_b).coords == gens.B.coords);
    if (k >= 4) {
      CHECK(sigma_a == parse_permutation("(1 2)", k + 1));
      // the full cycle 1 -> 2 -> ... -> k+1
      std::vector<int> cycle_images;
      for (int x = 1; x <= k + 1; ++x) cycle_images.push_back(x % (k + 1) + 1);
      CHECK(sigma_b == Permutation::from_one_line(cycle_images));
    }
  }
}

TEST_CASE("find_permutation on catalog examples") {
  GroupElement swapped{4, {parse4("-1*(z2-1)"), parse4("-1*(z1-1)")}, std::nullopt};
  CHECK(find_permutation(4, swapped) == parse_permutation("(2 3)(4 5)", 5));

  GroupElement id4 = theta(4, Permutation(5));
  id4.source_perm.reset();
  CHECK(find_permutation(4, id4) == Permutation(5));
  CHECK(find_permutations(4, id4).size() == 1);

  GroupElement junk{4, {parse4("1*z1"), parse4("1*z1^-1*z2")}, std::nullopt};
  CHECK_THROWS_AS(find_permutation(4, junk), NotAGroupElement);
}

TEST_CASE("black-box evaluator matching") {
  GroupElement hidden = theta(4, parse_permutation("(1 3 5)", 5));
  auto matches = find_permutations(
      4, [&](const OmegaPoint& z) { return apply(hidden, z); });
  REQUIRE(matches.size() == 1);
  CHECK(matches.front() == parse_permutation("(1 3 5)", 5));
}

TEST_CASE("closure of the standard generators is the whole group") {
  Generators g4 = standard_generators(4);
  auto group = closure(4, {g4.A, g4.B});
  CHECK(group.size() == 120);

  std::set<std::string> closure_set, image_set;
  for (const GroupElement& e : group) closure_set.insert(e.coords_str());
  for (const Permutation& sigma : enumerate_group(5)) image_set.insert(theta(4, sigma).coords_str());
  CHECK(closure_set == image_set);

  auto trivial = closure(4, {theta(4, Permutation(5))});
  CHECK(trivial.size() == 1);
}

TEST_CASE("kernel for the three-marked case") {
  auto kernel = kernel_theta3();
  REQUIRE(kernel.size() == 4);
  std::set<std::string> names;
  for (const Permutation& sigma : kernel) names.insert(sigma.cycles());
  CHECK(names == std::set<std::string>{"()", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"});

  // a group of exponent two: closed under composition, every element an involution
  for (const Permutation& a : kernel) {
    CHECK(a.compose(a) == Permutation(4));
    for (const Permutation& b : kernel) {
      Permutation ab = a.compose(b);
      CHECK(std::find(kernel.begin(), kernel.end(), ab) != kernel.end());
    }
  }

  // the image of the degree-4 group has exactly 24 / 4 = 6 distinct elements
  std::set<std::string> image;
  for (const Permutation& sigma : enumerate_group(4)) image.insert(theta(3, sigma).coords_str());
  CHECK(image.size() == 6);

  // the fibre over the identity is exactly the kernel
  auto fibre = find_permutations(3, theta(3, Permutation(4)));
  CHECK(fibre.size() == 4);
}

TEST_CASE("homomorphism property at sampled points") {
  auto all = enumerate_group(5);
  SampleRng rng(17);
  for (int t = 0; t < 100; ++t) {
    const Permutation& sigma = all[static_cast<std::size_t>(rng.below(all.size()))];
    const Permutation& tau = all[static_cast<std::size_t>(rng.below(all.size()))];
    GroupElement lhs = theta(4, sigma.compose(tau));
    GroupElement fs = theta(4, sigma), ft = theta(4, tau);
    for (std::uint64_t s = 0; s < 2; ++s) {
      OmegaPoint z = sample_omega_point(4, 50 + s, 300);
      CHECK(apply(lhs, z) == apply(fs, apply(ft, z)));
    }
  }
}

TEST_CASE("homomorphism property on 500 seeded pairs for k = 5 and 6") {
  for (int k : {5, 6}) {
    auto all = enumerate_group(k + 1);
    std::vector<OmegaPoint> points;
    for (std::uint64_t s = 0; s < 5; ++s)
      points.push_back(sample_omega_point(k, 80 + s, 500));
    SampleRng rng(static_cast<std::uint64_t>(k));
    for (int t = 0; t < 500; ++t) {
      const Permutation& sigma = all[static_cast<std::size_t>(rng.below(all.size()))];
      const Permutation& tau = all[static_cast<std::size_t>(rng.below(all.size()))];
      GroupElement lhs = theta(k, sigma.compose(tau));
      GroupElement fs = theta(k, sigma), ft = theta(k, tau);
      for (const OmegaPoint& z : points) CHECK(apply(lhs, z) == apply(fs, apply(ft, z)));
    }
  }
}

TEST_CASE("injectivity for k = 4 and 5") {
  for (int k : {4, 5}) {
    std::set<std::string> tuples;
    std::size_t total = 0;
    for (const Permutation& sigma : enumerate_group(k + 1)) {
      tuples.insert(theta(k, sigma).coords_str());
      ++total;
    }
    CHECK(tuples.size() == total);
  }
}

TEST_CASE("permutations fixing the normalized points induce coordinate shuffles") {
  for (int k : {4, 5}) {
    for (const Permutation& tau : enumerate_group(k - 2)) {
      // marked points 4..k+1 move by tau, the normalized three stay put;
      // coordinate j of the induced element reads off variable tau^-1(j)
      std::vector<int> images;
      for (int x = 1; x <= k + 1; ++x) images.push_back(x <= 3 ? x : tau(x - 3) + 3);
      GroupElement e = theta(k, Permutation::from_one_line(images));
      Permutation inv = tau.inverse();
      for (int j = 1; j <= k - 2; ++j)
        CHECK(e.coords[static_cast<std::size_t>(j) - 1] ==
              FactoredMap::from_factor(k, LinearFactor::var(inv(j))));
    }
  }
}

TEST_CASE("coordinate permutations stay inside the group") {
  // reindexing the coordinate maps of any element gives another element
  for (int k : {4, 5}) {
    std::map<std::string, Permutation> index;
    for (const Permutation& sigma : enumerate_group(k + 1)) {
      GroupElement e = theta(k, sigma);
      index.emplace(e.coords_str(), sigma);
    }
    auto coordinate_perms = enumerate_group(k - 2);
    for (const auto& [key, sigma] : index) {
      GroupElement e = theta(k, sigma);
      for (const Permutation& tau : coordinate_perms) {
        std::vector<FactoredMap> reordered;
        for (int j = 1; j <= k - 2; ++j)
          reordered.push_back(e.coords[static_cast<std::size_t>(tau(j)) - 1]);
        GroupElement shuffled{k, std::move(reordered), std::nullopt};
        CHECK(index.count(shuffled.coords_str()) == 1);
      }
    }
  }
}

TEST_CASE("catalog counts and membership") {
  Catalog c3 = coordinate_catalog(3);
  CHECK(c3.functions.size() == 6);

  Catalog c4 = coordinate_catalog(4);
  CHECK(c4.functions.size() == 30);
  for (const FactoredMap& f : c4.functions) check_coordinate_shape(f);

  Catalog c5 = coordinate_catalog(5);
  CHECK(c5.functions.size() == 90);
  for (const FactoredMap& f : c5.functions) check_coordinate_shape(f);

  // the three-variable family z_i (z_l - z_s) / (z_l (z_i - z_s)) in full
  int instantiations = 0;
  for (int s = 1; s <= 3; ++s)
    for (int l = 1; l <= 3; ++l)
      for (int i = 1; i <= 3; ++i) {
        if (s == l || s == i || l == i) continue;
        auto var = [](int a) { return SymbolicPoint::var(a); };
        FactoredMap f = symbolic_diff(var(l), var(s), 5)
                            ->multiply(FactoredMap::from_factor(5, LinearFactor::var(i)))
                            .multiply(FactoredMap::from_factor(5, LinearFactor::var(l), -1))
                            .multiply(symbolic_diff(var(i), var(s), 5)->invert());
        CHECK(c5.contains(f));
        ++instantiations;
      }
  CHECK(instantiations == 6);
}

TEST_CASE("group elements map configuration points to configuration points") {
  for (int k : {3, 4, 5}) {
    for (const Permutation& sigma : enumerate_group(k + 1)) {
      GroupElement e = theta(k, sigma);
      for (std::uint64_t s = 0; s < 2; ++s) {
        OmegaPoint z = sample_omega_point(k, 7 * s + 1, 100);
        OmegaPoint image = apply(e, z);  // constructor enforces the invariants
        CHECK(image.size() == z.size());
      }
      // coordinates are pairwise distinct canonical forms
      for (std::size_t i = 0; i < e.coords.size(); ++i)
        for (std::size_t j = i + 1; j < e.coords.size(); ++j)
          CHECK(!(e.coords[i] == e.coords[j]));
    }
  }
}

TEST_CASE("fixture lines round-trip group elements") {
  GroupElement e = theta(4, parse_permutation("(1 2 3 4 5)", 5));
  std::string line = element_fixture_line(e);
  CHECK(line == "(1 2 3 4 5)\t1*z2*(z2-1)^-1 , -1*z2*(z1-z2)^-1");
  GroupElement back = parse_element_fixture_line(line, 4);
  CHECK(back.coords == e.coords);
  CHECK(back.source_perm == e.source_perm);

  GroupElement anonymous{4, e.coords, std::nullopt};
  CHECK_THROWS_AS(element_fixture_line(anonymous), MissingProvenance);
  CHECK_THROWS_AS(parse_element_fixture_line("(1 2) no tab", 4), MalformedInput);
  CHECK_THROWS_AS(parse_element_fixture_line("(1 2)\t1*z1", 4), LengthMismatch);
}

TEST_CASE("lambda stays a sign for every coordinate up to k = 6") {
  for (int k = 3; k <= 6; ++k) {
    Catalog catalog = coordinate_catalog(k);
    for (const FactoredMap& f : catalog.functions)
      CHECK((f.lambda() == Rational(1) || f.lambda() == Rational(-1)));
  }
}
