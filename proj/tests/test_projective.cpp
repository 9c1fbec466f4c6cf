#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/integer.hpp>
#include <vector>

#include "torelli/omega.hpp"
#include "torelli/proj_point.hpp"

using namespace torelli;

namespace {

// Independent oracle for all-finite quadruples: the defining formula
// evaluated in plain rational arithmetic.
Rational rational_cross_ratio(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d) {
  return ((d - b) * (c - a)) / ((d - a) * (c - b));
}

ProjPoint pp(long long n, long long d = 1) { return ProjPoint(Rational(BigInt(n), BigInt(d))); }

}  // namespace

TEST_CASE("rational normalization invariants") {
  Rational r(BigInt(-6), BigInt(-8));
  CHECK(r.num() == 3);
  CHECK(r.den() == 4);
  CHECK(Rational(BigInt(0), BigInt(-5)) == Rational(0));
  CHECK(Rational(BigInt(0), BigInt(7)).den() == 1);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), InvalidParameter);
  CHECK(Rational::parse("-3/6") == Rational(BigInt(-1), BigInt(2)));
  CHECK(Rational::parse("42").str() == "42");
  CHECK(Rational(BigInt(7), BigInt(-2)).str() == "-7/2");
  CHECK_THROWS_AS(Rational::parse("1/x"), MalformedInput);
}

TEST_CASE("projective point normalization and text form") {
  CHECK(ProjPoint(BigInt(2), BigInt(-4)) == ProjPoint(Rational(BigInt(-1), BigInt(2))));
  CHECK(ProjPoint(BigInt(-3), BigInt(0)) == ProjPoint::infinity());
  CHECK(ProjPoint::infinity().str() == "inf");
  CHECK(ProjPoint::parse("inf").is_infinity());
  CHECK(ProjPoint::parse("5/10") == pp(1, 2));
  CHECK(pp(-7, 3).str() == "-7/3");
  CHECK_THROWS_AS(ProjPoint(BigInt(0), BigInt(0)), InvalidParameter);
  CHECK_THROWS_AS(ProjPoint::infinity().to_rational(), OutOfRange);
}

TEST_CASE("cross-ratio examples") {
  ProjPoint inf = ProjPoint::infinity();
  // normalization: [inf,0,1,d] = d
  CHECK(cross_ratio(inf, pp(0), pp(1), pp(5)) == pp(5));
  // entry at infinity in second slot
  CHECK(cross_ratio(pp(0), inf, pp(1), pp(4)) == pp(1, 4));
  // all finite, against the rational oracle
  CHECK(cross_ratio(pp(2), pp(0), pp(1), pp(3)) == pp(-3));
  CHECK(rational_cross_ratio(Rational(2), Rational(0), Rational(1), Rational(3)) ==
        Rational(-3));
}

TEST_CASE("cross-ratio rejects degenerate tuples") {
  CHECK_THROWS_AS(cross_ratio(pp(2), pp(2), pp(1), pp(3)), DegenerateTuple);
  CHECK_THROWS_AS(cross_ratio(ProjPoint::infinity(), pp(0), pp(1), ProjPoint::infinity()),
                  DegenerateTuple);
}

TEST_CASE("cross-ratio agrees with rational arithmetic on a finite grid") {
  std::vector<Rational> grid;
  for (int num = -3; num <= 3; ++num)
    for (int den = 1; den <= 2; ++den) grid.emplace_back(BigInt(num), BigInt(den));

  int checked = 0;
  for (const Rational& a : grid)
    for (const Rational& b : grid)
      for (const Rational& c : grid)
        for (const Rational& d : grid) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          ProjPoint homog = cross_ratio(ProjPoint(a), ProjPoint(b), ProjPoint(c), ProjPoint(d));
          CHECK(homog.to_rational() == rational_cross_ratio(a, b, c, d));
          // never 0, 1 or inf on distinct inputs
          CHECK(!homog.is_zero());
          CHECK(!homog.is_one());
          CHECK(!homog.is_infinity());
          ++checked;
        }
  CHECK(checked > 5000);
}

TEST_CASE("cross-ratio Klein four-group symmetry") {
  std::vector<ProjPoint> grid = {ProjPoint::infinity(), pp(0),    pp(1),   pp(2),
                                 pp(-1),                pp(1, 2), pp(3),   pp(-5, 3),
                                 pp(7, 2),              pp(-2)};
  for (std::size_t ia = 0; ia < grid.size(); ++ia)
    for (std::size_t ib = 0; ib < grid.size(); ++ib)
      for (std::size_t ic = 0; ic < grid.size(); ++ic)
        for (std::size_t id = 0; id < grid.size(); ++id) {
          if (ia == ib || ia == ic || ia == id || ib == ic || ib == id || ic == id) continue;
          const ProjPoint &a = grid[ia], &b = grid[ib], &c = grid[ic], &d = grid[id];
          ProjPoint value = cross_ratio(a, b, c, d);
          CHECK(value == cross_ratio(b, a, d, c));
          CHECK(value == cross_ratio(c, d, a, b));
          CHECK(value == cross_ratio(d, c, b, a));
        }
}

TEST_CASE("cross-ratio output is normalized") {
  ProjPoint v = cross_ratio(pp(4), pp(0), pp(2), pp(6));
  CHECK(boost::multiprecision::gcd(v.x() < 0 ? BigInt(-v.x()) : v.x(), v.y()) == 1);
  CHECK(v.y() > 0);
}

TEST_CASE("omega point invariants") {
  CHECK_THROWS_AS(OmegaPoint::from_rationals({Rational(0)}), OutOfRange);
  CHECK_THROWS_AS(OmegaPoint::from_rationals({Rational(1)}), OutOfRange);
  CHECK_THROWS_AS(OmegaPoint::from_rationals({Rational(2), Rational(2)}), RepeatedEntry);
  CHECK_THROWS_AS(OmegaPoint({ProjPoint::infinity()}), OutOfRange);
  OmegaPoint z = OmegaPoint::parse("2, -1/3, 7");
  CHECK(z.ambient_k() == 5);
  CHECK(z.str() == "2,-1/3,7");
}

TEST_CASE("sampler produces valid deterministic points") {
  OmegaPoint a = sample_omega_point(3, 0, 10);
  CHECK(a.size() == 1);

  OmegaPoint b = sample_omega_point(5, 7, 100);
  CHECK(b.size() == 3);
  // invariants are enforced by the OmegaPoint constructor; spot-check anyway
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(!b[i].is_zero());
    CHECK(!b[i].is_one());
    CHECK(!b[i].is_infinity());
  }

  CHECK(sample_omega_point(5, 7, 100) == b);
  CHECK(sample_omega_point(4, 1, 50) == sample_omega_point(4, 1, 50));
}

TEST_CASE("sampler rejects unusable parameters") {
  CHECK_THROWS_AS(sample_omega_point(2, 0, 10), InvalidParameter);
  CHECK_THROWS_AS(sample_omega_point(5, 0, 3), InvalidParameter);
}
