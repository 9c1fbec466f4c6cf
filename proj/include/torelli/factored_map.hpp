#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "torelli/omega.hpp"

namespace torelli {

enum class FactorKind : std::uint8_t { Var = 0, VarMinusOne = 1, VarDiff = 2 };

// One linear hyperplane form: z_i, z_i - 1, or z_i - z_j with i < j.
// The orientation sign of a difference is absorbed into the enclosing
// map's scalar, so structural equality is functional equality.
struct LinearFactor {
  FactorKind kind;
  int i = 0;
  int j = 0;  // only for VarDiff, with i < j

  static LinearFactor var(int i) { return {FactorKind::Var, i, 0}; }
  static LinearFactor var_minus_one(int i) { return {FactorKind::VarMinusOne, i, 0}; }
  static LinearFactor var_diff(int i, int j) { return {FactorKind::VarDiff, i, j}; }

  auto operator<=>(const LinearFactor&) const = default;

  std::string str() const;  // "z3", "(z3-1)", "(z1-z3)"
};

// A rational map in canonical factored form: a nonzero scalar times a
// product of linear hyperplane factors with nonzero integer exponents,
// keyed in a fixed total order. Equality of maps is structural equality.
class FactoredMap {
 public:
  using Factors = std::map<LinearFactor, int>;

  static FactoredMap constant(int ambient_k, Rational lambda);
  static FactoredMap from_factor(int ambient_k, LinearFactor factor, int exponent = 1,
                                 Rational lambda = Rational(1));

  int ambient_k() const { return ambient_k_; }
  const Rational& lambda() const { return lambda_; }
  const Factors& factors() const { return factors_; }
  bool is_constant() const { return factors_.empty(); }

  FactoredMap multiply(const FactoredMap& other) const;
  FactoredMap invert() const;

  // Exact specialization. On a configuration point no factor vanishes, so
  // the result is a finite nonzero value; elsewhere a vanishing
  // negative-exponent factor yields the point at infinity.
  ProjPoint evaluate(const OmegaPoint& z) const;
  ProjPoint evaluate_at(const std::vector<Rational>& values) const;

  bool operator==(const FactoredMap& o) const {
    return ambient_k_ == o.ambient_k_ && lambda_ == o.lambda_ && factors_ == o.factors_;
  }
  bool operator<(const FactoredMap& o) const;

  // Whitespace-free canonical serialization, e.g. "-1*(z2-1)^-1".
  std::string str() const;
  static FactoredMap parse(const std::string& text, int ambient_k);

 private:
  FactoredMap(int ambient_k, Rational lambda, Factors factors);

  int ambient_k_;
  Rational lambda_;
  Factors factors_;
};

inline bool equal(const FactoredMap& f, const FactoredMap& g) {
  if (f.ambient_k() != g.ambient_k())
    throw AmbientMismatch("comparing maps with different ambient k");
  return f == g;
}

// Independent polynomial-identity-testing check: evaluates both maps at
// `trials` sampled configuration points and reports whether every pair of
// values coincides.
bool equal_randomized(const FactoredMap& f, const FactoredMap& g, int trials,
                      std::uint64_t seed, long long height = 1000);

// A formal marked point: infinity, 0, 1, or the variable z_j.
class SymbolicPoint {
 public:
  enum class Kind : std::uint8_t { Infinity = 0, Zero = 1, One = 2, Var = 3 };

  static SymbolicPoint infinity() { return SymbolicPoint(Kind::Infinity, 0); }
  static SymbolicPoint zero() { return SymbolicPoint(Kind::Zero, 0); }
  static SymbolicPoint one() { return SymbolicPoint(Kind::One, 0); }
  static SymbolicPoint var(int index) { return SymbolicPoint(Kind::Var, index); }

  // The marked tuple (p_1, ..., p_{k+1}) = (inf, 0, 1, z_1, ..., z_{k-2}).
  static SymbolicPoint marked(int index, int ambient_k);

  Kind kind() const { return kind_; }
  int index() const { return index_; }
  bool is_infinity() const { return kind_ == Kind::Infinity; }

  auto operator<=>(const SymbolicPoint&) const = default;

  std::string str() const;

 private:
  SymbolicPoint(Kind kind, int index) : kind_(kind), index_(index) {}
  Kind kind_;
  int index_;
};

// The difference p - q as a factored map; std::nullopt marks a formally
// infinite difference (either argument is the point at infinity).
std::optional<FactoredMap> symbolic_diff(const SymbolicPoint& p, const SymbolicPoint& q,
                                         int ambient_k);

// [a,b,c,d] = (d-b)(c-a) / ((d-a)(c-b)) on symbolic points. When one
// argument is infinity the matched pair of infinite differences (one in the
// numerator, one in the denominator) cancels and is dropped.
FactoredMap cross_ratio_symbolic(const SymbolicPoint& a, const SymbolicPoint& b,
                                 const SymbolicPoint& c, const SymbolicPoint& d,
                                 int ambient_k);

}  // namespace torelli
