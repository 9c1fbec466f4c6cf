#pragma once

#include <string>

#include "torelli/rational.hpp"

namespace torelli {

// A point of the projective rational line in normalized homogeneous
// coordinates [x : y]. Finite points have y > 0 and gcd(|x|, y) = 1;
// the point at infinity is exactly [1 : 0].
class ProjPoint {
 public:
  ProjPoint() : x_(0), y_(1) {}
  ProjPoint(BigInt x, BigInt y);
  ProjPoint(const Rational& r) : x_(r.num()), y_(r.den()) {}  // NOLINT(google-explicit-constructor)
  ProjPoint(long long value) : x_(value), y_(1) {}            // NOLINT(google-explicit-constructor)

  static ProjPoint infinity() { return ProjPoint(1, 0); }

  const BigInt& x() const { return x_; }
  const BigInt& y() const { return y_; }

  bool is_infinity() const { return y_ == 0; }
  bool is_zero() const { return x_ == 0 && y_ != 0; }
  bool is_one() const { return x_ == y_; }

  Rational to_rational() const;  // throws OutOfRange for the point at infinity

  bool operator==(const ProjPoint& o) const { return x_ == o.x_ && y_ == o.y_; }
  std::strong_ordering operator<=>(const ProjPoint& o) const;

  // "inf" for the point at infinity, otherwise the rational form "n/d" ("n"
  // when the denominator is 1).
  std::string str() const;
  static ProjPoint parse(const std::string& text);

 private:
  BigInt x_;
  BigInt y_;
};

// The cross-ratio [a,b,c,d] = (d-b)(c-a) / ((d-a)(c-b)) evaluated in
// homogeneous coordinates, so entries at infinity need no special casing.
// Inputs must be pairwise distinct; the result is then never 0, 1 or inf.
ProjPoint cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                      const ProjPoint& d);

}  // namespace torelli
