#include "torelli/proj_point.hpp"

#include <boost/multiprecision/integer.hpp>

namespace torelli {

ProjPoint::ProjPoint(BigInt x, BigInt y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_ == 0 && y_ == 0) throw InvalidParameter("projective point [0 : 0]");
  if (y_ == 0) {
    x_ = 1;
    return;
  }
  if (y_ < 0) {
    x_ = -x_;
    y_ = -y_;
  }
  if (x_ == 0) {
    y_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(x_ < 0 ? BigInt(-x_) : x_, y_);
  if (g > 1) {
    x_ /= g;
    y_ /= g;
  }
}

Rational ProjPoint::to_rational() const {
  if (is_infinity()) throw OutOfRange("point at infinity has no rational value");
  return Rational(x_, y_);
}

std::strong_ordering ProjPoint::operator<=>(const ProjPoint& o) const {
  // Infinity sorts last; finite points by value.
  if (is_infinity() || o.is_infinity()) {
    int lhs = is_infinity() ? 1 : 0;
    int rhs = o.is_infinity() ? 1 : 0;
    return lhs <=> rhs;
  }
  BigInt l = x_ * o.y_;
  BigInt r = o.x_ * y_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ProjPoint::str() const {
  if (is_infinity()) return "inf";
  return to_rational().str();
}

ProjPoint ProjPoint::parse(const std::string& text) {
  if (text == "inf" || text == "-inf") return infinity();
  return ProjPoint(Rational::parse(text));
}

namespace {

// det(u, v) = x_u y_v - x_v y_u; zero exactly when u = v projectively.
BigInt proj_det(const ProjPoint& u, const ProjPoint& v) {
  return u.x() * v.y() - v.x() * u.y();
}

}  // namespace

ProjPoint cross_ratio(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c,
                      const ProjPoint& d) {
  const ProjPoint* pts[4] = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (*pts[i] == *pts[j])
        throw DegenerateTuple("cross-ratio of a tuple with repeated points");
  BigInt num = proj_det(d, b) * proj_det(c, a);
  BigInt den = proj_det(d, a) * proj_det(c, b);
  return ProjPoint(std::move(num), std::move(den));
}

}  // namespace torelli
