#include "torelli/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace torelli {

namespace {

BigInt gcd_pos(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a < 0 ? BigInt(-a) : a, b);
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw InvalidParameter("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = gcd_pos(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw InvalidParameter("division by zero rational");
  return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::inverse() const {
  if (num_ == 0) throw InvalidParameter("inverse of zero rational");
  return Rational(den_, num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  BigInt lhs = num_ * o.den_;
  BigInt rhs = o.num_ * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += "/";
    s += den_.str();
  }
  return s;
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw MalformedInput("empty rational literal");
  auto parse_int = [](const std::string& part) -> BigInt {
    if (part.empty()) throw MalformedInput("empty integer literal");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw MalformedInput("sign without digits: " + part);
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9')
        throw MalformedInput("invalid integer literal: " + part);
    }
    return BigInt(part);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace torelli
