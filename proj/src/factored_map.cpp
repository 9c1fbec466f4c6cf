#include "torelli/factored_map.hpp"

#include <boost/multiprecision/integer.hpp>
#include <cctype>

namespace torelli {

namespace {

void check_index(int idx, int ambient_k, const char* what) {
  if (idx < 1 || idx > ambient_k - 2)
    throw OutOfRange(std::string(what) + " index " + std::to_string(idx) +
                     " outside 1.." + std::to_string(ambient_k - 2));
}

void check_factor(const LinearFactor& f, int ambient_k) {
  switch (f.kind) {
    case FactorKind::Var:
    case FactorKind::VarMinusOne:
      check_index(f.i, ambient_k, "variable");
      break;
    case FactorKind::VarDiff:
      check_index(f.i, ambient_k, "difference");
      check_index(f.j, ambient_k, "difference");
      if (f.i >= f.j) throw InvalidParameter("difference factor must have i < j");
      break;
  }
}

BigInt pow_big(const BigInt& base, int exp) {
  BigInt out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

std::string LinearFactor::str() const {
  switch (kind) {
    case FactorKind::Var:
      return "z" + std::to_string(i);
    case FactorKind::VarMinusOne:
      return "(z" + std::to_string(i) + "-1)";
    case FactorKind::VarDiff:
      return "(z" + std::to_string(i) + "-z" + std::to_string(j) + ")";
  }
  throw InvalidParameter("corrupt factor kind");
}

FactoredMap::FactoredMap(int ambient_k, Rational lambda, Factors factors)
    : ambient_k_(ambient_k), lambda_(std::move(lambda)), factors_(std::move(factors)) {
  if (ambient_k_ < 3) throw InvalidParameter("factored map needs ambient k >= 3");
  if (lambda_.is_zero()) throw InvalidParameter("factored map with zero scalar");
  for (const auto& [factor, exponent] : factors_) {
    check_factor(factor, ambient_k_);
    if (exponent == 0) throw InvalidParameter("zero exponent stored in factored map");
  }
}

FactoredMap FactoredMap::constant(int ambient_k, Rational lambda) {
  return FactoredMap(ambient_k, std::move(lambda), {});
}

FactoredMap FactoredMap::from_factor(int ambient_k, LinearFactor factor, int exponent,
                                     Rational lambda) {
  Factors f;
  if (exponent != 0) f.emplace(factor, exponent);
  return FactoredMap(ambient_k, std::move(lambda), std::move(f));
}

FactoredMap FactoredMap::multiply(const FactoredMap& other) const {
  if (ambient_k_ != other.ambient_k_)
    throw AmbientMismatch("multiplying maps with ambient k " + std::to_string(ambient_k_) +
                          " and " + std::to_string(other.ambient_k_));
  Factors merged = factors_;
  for (const auto& [factor, exponent] : other.factors_) {
    auto [it, inserted] = merged.emplace(factor, exponent);
    if (!inserted) {
      it->second += exponent;
      if (it->second == 0) merged.erase(it);
    }
  }
  return FactoredMap(ambient_k_, lambda_ * other.lambda_, std::move(merged));
}

FactoredMap FactoredMap::invert() const {
  Factors flipped;
  for (const auto& [factor, exponent] : factors_) flipped.emplace(factor, -exponent);
  return FactoredMap(ambient_k_, lambda_.inverse(), std::move(flipped));
}

ProjPoint FactoredMap::evaluate(const OmegaPoint& z) const {
  if (z.ambient_k() != ambient_k_)
    throw LengthMismatch("point of ambient k " + std::to_string(z.ambient_k()) +
                         " fed to map of ambient k " + std::to_string(ambient_k_));
  std::vector<Rational> values;
  values.reserve(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) values.push_back(z[i].to_rational());
  return evaluate_at(values);
}

ProjPoint FactoredMap::evaluate_at(const std::vector<Rational>& values) const {
  if (static_cast<int>(values.size()) != ambient_k_ - 2)
    throw LengthMismatch("expected " + std::to_string(ambient_k_ - 2) + " coordinates, got " +
                         std::to_string(values.size()));
  BigInt num = lambda_.num();
  BigInt den = lambda_.den();
  for (const auto& [factor, exponent] : factors_) {
    Rational value;
    switch (factor.kind) {
      case FactorKind::Var:
        value = values[static_cast<std::size_t>(factor.i) - 1];
        break;
      case FactorKind::VarMinusOne:
        value = values[static_cast<std::size_t>(factor.i) - 1] - Rational(1);
        break;
      case FactorKind::VarDiff:
        value = values[static_cast<std::size_t>(factor.i) - 1] -
                values[static_cast<std::size_t>(factor.j) - 1];
        break;
    }
    if (exponent > 0) {
      num *= pow_big(value.num(), exponent);
      den *= pow_big(value.den(), exponent);
    } else {
      num *= pow_big(value.den(), -exponent);
      den *= pow_big(value.num(), -exponent);
    }
  }
  if (num == 0 && den == 0)
    throw InvalidParameter("indeterminate 0/0 specialization off the configuration domain");
  return ProjPoint(std::move(num), std::move(den));
}

bool FactoredMap::operator<(const FactoredMap& o) const {
  if (ambient_k_ != o.ambient_k_) return ambient_k_ < o.ambient_k_;
  if (factors_ != o.factors_)
    return std::lexicographical_compare(
        factors_.begin(), factors_.end(), o.factors_.begin(), o.factors_.end());
  return lambda_ < o.lambda_;
}

std::string FactoredMap::str() const {
  std::string out = lambda_.str();
  for (const auto& [factor, exponent] : factors_) {
    out += "*";
    out += factor.str();
    if (exponent != 1) {
      out += "^";
      out += std::to_string(exponent);
    }
  }
  return out;
}

namespace {

// Minimal scanner for the canonical grammar:
//   map    := coef ("*" term)*
//   term   := atom ("^" int)?
//   atom   := "z" idx | "(z" idx "-1)" | "(z" idx "-z" idx ")"
struct MapScanner {
  const std::string& text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }

  char peek() const {
    if (done()) throw MalformedInput("truncated map: " + text);
    return text[pos];
  }

  void expect(char c) {
    if (done() || text[pos] != c)
      throw MalformedInput("expected '" + std::string(1, c) + "' at offset " +
                           std::to_string(pos) + " in: " + text);
    ++pos;
  }

  int integer() {
    std::size_t start = pos;
    if (!done() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw MalformedInput("expected integer at offset " + std::to_string(start) + " in: " + text);
    return std::stoi(text.substr(start, pos - start));
  }

  int var_index() {
    expect('z');
    if (done() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw MalformedInput("expected variable index at offset " + std::to_string(pos) +
                           " in: " + text);
    return integer();
  }

  LinearFactor atom() {
    if (peek() == 'z') return LinearFactor::var(var_index());
    expect('(');
    int i = var_index();
    expect('-');
    LinearFactor out = LinearFactor::var_minus_one(i);
    if (peek() == 'z') {
      int j = var_index();
      if (i >= j) throw MalformedInput("difference factor must be ordered (zi-zj), i < j");
      out = LinearFactor::var_diff(i, j);
    } else {
      expect('1');
    }
    expect(')');
    return out;
  }

  std::string coef() {
    std::size_t end = text.find('*', pos);
    std::size_t stop = (end == std::string::npos) ? text.size() : end;
    std::string out = text.substr(pos, stop - pos);
    pos = stop;
    return out;
  }
};

}  // namespace

FactoredMap FactoredMap::parse(const std::string& text, int ambient_k) {
  MapScanner scan{text};
  Rational lambda = Rational::parse(scan.coef());
  if (lambda.is_zero()) throw MalformedInput("map scalar must be nonzero: " + text);
  FactoredMap out = FactoredMap::constant(ambient_k, lambda);
  while (!scan.done()) {
    scan.expect('*');
    LinearFactor factor = scan.atom();
    int exponent = 1;
    if (!scan.done() && scan.peek() == '^') {
      scan.expect('^');
      exponent = scan.integer();
    }
    if (exponent == 0) throw MalformedInput("zero exponent in map: " + text);
    out = out.multiply(FactoredMap::from_factor(ambient_k, factor, exponent));
  }
  return out;
}

bool equal_randomized(const FactoredMap& f, const FactoredMap& g, int trials,
                      std::uint64_t seed, long long height) {
  if (f.ambient_k() != g.ambient_k())
    throw AmbientMismatch("comparing maps with different ambient k");
  if (trials < 1) throw InvalidParameter("trials must be >= 1");
  for (int t = 0; t < trials; ++t) {
    OmegaPoint z = sample_omega_point(f.ambient_k(), seed + static_cast<std::uint64_t>(t), height);
    if (!(f.evaluate(z) == g.evaluate(z))) return false;
  }
  return true;
}

SymbolicPoint SymbolicPoint::marked(int index, int ambient_k) {
  if (index < 1 || index > ambient_k + 1)
    throw OutOfRange("marked point index " + std::to_string(index) + " outside 1.." +
                     std::to_string(ambient_k + 1));
  switch (index) {
    case 1:
      return infinity();
    case 2:
      return zero();
    case 3:
      return one();
    default:
      return var(index - 3);
  }
}

std::string SymbolicPoint::str() const {
  switch (kind_) {
    case Kind::Infinity:
      return "inf";
    case Kind::Zero:
      return "0";
    case Kind::One:
      return "1";
    case Kind::Var:
      return "z" + std::to_string(index_);
  }
  throw InvalidParameter("corrupt symbolic point");
}

std::optional<FactoredMap> symbolic_diff(const SymbolicPoint& p, const SymbolicPoint& q,
                                         int ambient_k) {
  if (p == q) throw IdenticalPoints("difference of identical symbolic points");
  if (p.is_infinity() || q.is_infinity()) return std::nullopt;

  using Kind = SymbolicPoint::Kind;
  if (p.kind() == Kind::Var) check_index(p.index(), ambient_k, "variable");
  if (q.kind() == Kind::Var) check_index(q.index(), ambient_k, "variable");

  // Finite cases: constants 0, 1 and variables z_j.
  if (p.kind() == Kind::Var && q.kind() == Kind::Var) {
    int i = p.index(), j = q.index();
    if (i < j) return FactoredMap::from_factor(ambient_k, LinearFactor::var_diff(i, j));
    return FactoredMap::from_factor(ambient_k, LinearFactor::var_diff(j, i), 1, Rational(-1));
  }
  if (p.kind() == Kind::Var) {
    // z_i - 0 or z_i - 1
    if (q.kind() == Kind::Zero)
      return FactoredMap::from_factor(ambient_k, LinearFactor::var(p.index()));
    return FactoredMap::from_factor(ambient_k, LinearFactor::var_minus_one(p.index()));
  }
  if (q.kind() == Kind::Var) {
    // 0 - z_j or 1 - z_j
    if (p.kind() == Kind::Zero)
      return FactoredMap::from_factor(ambient_k, LinearFactor::var(q.index()), 1, Rational(-1));
    return FactoredMap::from_factor(ambient_k, LinearFactor::var_minus_one(q.index()), 1,
                                    Rational(-1));
  }
  // 1 - 0 or 0 - 1
  return FactoredMap::constant(ambient_k, p.kind() == Kind::One ? Rational(1) : Rational(-1));
}

FactoredMap cross_ratio_symbolic(const SymbolicPoint& a, const SymbolicPoint& b,
                                 const SymbolicPoint& c, const SymbolicPoint& d,
                                 int ambient_k) {
  const SymbolicPoint pts[4] = {a, b, c, d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (pts[i] == pts[j])
        throw DegenerateTuple("cross-ratio of a tuple with repeated symbolic points");

  // Numerator differences (d-b), (c-a); denominator differences (d-a), (c-b).
  // An infinite entry appears in exactly one difference of each and the two
  // cancel, leaving a finite ratio.
  std::pair<SymbolicPoint, SymbolicPoint> numerator[2] = {{d, b}, {c, a}};
  std::pair<SymbolicPoint, SymbolicPoint> denominator[2] = {{d, a}, {c, b}};

  FactoredMap out = FactoredMap::constant(ambient_k, Rational(1));
  for (const auto& [p, q] : numerator)
    if (auto diff = symbolic_diff(p, q, ambient_k)) out = out.multiply(*diff);
  for (const auto& [p, q] : denominator)
    if (auto diff = symbolic_diff(p, q, ambient_k)) out = out.multiply(diff->invert());
  return out;
}

}  // namespace torelli
