#include "torelli/classify.hpp"

#include <algorithm>
#include <boost/multiprecision/integer.hpp>
#include <cstdlib>
#include <map>
#include <sstream>

namespace torelli {

CrossRatioSpec::CrossRatioSpec(int k, std::array<int, 4> idx) : ambient_k(k), indices(idx) {
  if (k < 4) throw InvalidParameter("cross-ratio quadruples need ambient k >= 4");
  for (int v : indices)
    if (v < 1 || v > k + 1)
      throw OutOfRange("marked-point index " + std::to_string(v) + " outside 1.." +
                       std::to_string(k + 1));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (indices[static_cast<std::size_t>(i)] == indices[static_cast<std::size_t>(j)])
        throw RepeatedEntry("quadruple with repeated index " +
                            std::to_string(indices[static_cast<std::size_t>(i)]));
}

std::string CrossRatioSpec::str() const {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (i) out += ",";
    out += std::to_string(indices[static_cast<std::size_t>(i)]);
  }
  return out;
}

CrossRatioSpec CrossRatioSpec::parse(const std::string& text, int k) {
  std::array<int, 4> idx{};
  std::stringstream ss(text);
  std::string item;
  int n = 0;
  while (std::getline(ss, item, ',')) {
    if (n >= 4) throw MalformedInput("quadruple with more than four indices: " + text);
    try {
      idx[static_cast<std::size_t>(n)] = std::stoi(item);
    } catch (const std::exception&) {
      throw MalformedInput("invalid quadruple entry: " + item);
    }
    ++n;
  }
  if (n != 4) throw MalformedInput("quadruple needs exactly four indices: " + text);
  return CrossRatioSpec(k, idx);
}

std::vector<CrossRatioSpec> all_cross_ratio_specs(int k) {
  std::vector<CrossRatioSpec> out;
  for (int a = 1; a <= k + 1; ++a)
    for (int b = 1; b <= k + 1; ++b)
      for (int c = 1; c <= k + 1; ++c)
        for (int d = 1; d <= k + 1; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          out.emplace_back(k, std::array<int, 4>{a, b, c, d});
        }
  return out;
}

FactoredMap lc_map(const CrossRatioSpec& spec) {
  int k = spec.ambient_k;
  return cross_ratio_symbolic(SymbolicPoint::marked(spec.indices[0], k),
                              SymbolicPoint::marked(spec.indices[1], k),
                              SymbolicPoint::marked(spec.indices[2], k),
                              SymbolicPoint::marked(spec.indices[3], k), k);
}

std::optional<int> collision_case(const CrossRatioSpec& c1, const CrossRatioSpec& c2) {
  if (c1.ambient_k != c2.ambient_k)
    throw AmbientMismatch("comparing quadruples with different ambient k");
  // A cross-ratio is invariant under the three double transpositions of its
  // entries, so each map has four quadruple representations. The
  // three-matching-slots test runs against each representation of c2; the
  // literal slot test alone would miss pairs that only align after
  // reindexing.
  static constexpr int kKleinReindex[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  for (const auto& reindex : kKleinReindex) {
    int differing = 0;
    int where = 0;
    for (int r = 0; r < 4; ++r) {
      if (c1.indices[static_cast<std::size_t>(r)] !=
          c2.indices[static_cast<std::size_t>(reindex[r])]) {
        ++differing;
        where = r + 1;
      }
    }
    if (differing == 1) return where;
  }
  return std::nullopt;
}

bool collision_free(const CrossRatioSpec& c1, const CrossRatioSpec& c2) {
  return collision_case(c1, c2).has_value();
}

namespace {

// Dense univariate polynomial with rational coefficients, lowest degree
// first. Degrees stay tiny (at most 2) throughout the witness search.
using Poly = std::vector<Rational>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void poly_trim(Poly& p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

// The map as a (numerator, denominator) pair of polynomials in the pivot
// variable, all other variables specialized to the given values.
std::pair<Poly, Poly> specialize(const FactoredMap& map, int pivot,
                                 const std::vector<Rational>& values) {
  Poly num{map.lambda()};
  Poly den{Rational(1)};
  auto value_of = [&](int idx) { return values[static_cast<std::size_t>(idx) - 1]; };
  for (const auto& [factor, exponent] : map.factors()) {
    Poly linear;  // the factor as a polynomial in the pivot variable
    switch (factor.kind) {
      case FactorKind::Var:
        linear = (factor.i == pivot) ? Poly{Rational(0), Rational(1)} : Poly{value_of(factor.i)};
        break;
      case FactorKind::VarMinusOne:
        linear = (factor.i == pivot) ? Poly{Rational(-1), Rational(1)}
                                     : Poly{value_of(factor.i) - Rational(1)};
        break;
      case FactorKind::VarDiff:
        if (factor.i == pivot)
          linear = Poly{-value_of(factor.j), Rational(1)};
        else if (factor.j == pivot)
          linear = Poly{value_of(factor.i), Rational(-1)};
        else
          linear = Poly{value_of(factor.i) - value_of(factor.j)};
        break;
    }
    for (int e = 0; e < std::abs(exponent); ++e) {
      if (exponent > 0)
        num = poly_mul(num, linear);
      else
        den = poly_mul(den, linear);
    }
  }
  poly_trim(num);
  poly_trim(den);
  return {num, den};
}

// Rational roots of a polynomial of degree <= 2 with rational coefficients.
// An identically-zero polynomial is reported separately.
struct RootSet {
  bool identically_zero = false;
  std::vector<Rational> roots;
};

RootSet rational_roots(Poly p) {
  poly_trim(p);
  RootSet out;
  if (p.size() == 1) {
    out.identically_zero = p[0].is_zero();
    return out;
  }
  if (p.size() == 2) {
    out.roots.push_back(-(p[0] / p[1]));
    return out;
  }
  if (p.size() != 3) throw InvalidParameter("witness equation of unexpected degree");
  // Clear denominators: a x^2 + b x + c with integer a, b, c.
  BigInt common = p[0].den() * p[1].den() * p[2].den();
  BigInt a = p[2].num() * (common / p[2].den());
  BigInt b = p[1].num() * (common / p[1].den());
  BigInt c = p[0].num() * (common / p[0].den());
  BigInt disc = b * b - 4 * a * c;
  if (disc < 0) return out;
  BigInt root = boost::multiprecision::sqrt(disc);
  if (root * root != disc) return out;  // irrational roots: no rational witness here
  out.roots.emplace_back(-b + root, 2 * a);
  if (root != 0) out.roots.emplace_back(-b - root, 2 * a);
  return out;
}

bool valid_coordinate(const Rational& v, const std::vector<Rational>& others) {
  if (v == Rational(0) || v == Rational(1)) return false;
  return std::find(others.begin(), others.end(), v) == others.end();
}

std::uint64_t mix_seed(std::uint64_t seed, const CrossRatioSpec& c1, const CrossRatioSpec& c2,
                       int attempt) {
  std::uint64_t h = seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL;
  for (int v : c1.indices) h = h * 1099511628211ULL + static_cast<std::uint64_t>(v);
  for (int v : c2.indices) h = h * 1099511628211ULL + static_cast<std::uint64_t>(v);
  return h + static_cast<std::uint64_t>(attempt) * 0x853c49e6748fea9bULL;
}

// Small rationals ordered by height, excluding 0 and 1. Collision curves
// often carry their rational points at tiny heights only (the residual
// equation needs a square discriminant), so a deterministic scan of these
// values finds witnesses that uniform random specialization would miss.
const std::vector<Rational>& small_rational_ladder() {
  static const std::vector<Rational> ladder = [] {
    std::vector<Rational> out;
    std::vector<Rational> seen;
    auto push = [&](long long num, long long den) {
      Rational r{BigInt(num), BigInt(den)};
      if (r == Rational(0) || r == Rational(1)) return;
      if (std::find(seen.begin(), seen.end(), r) != seen.end()) return;
      seen.push_back(r);
      out.push_back(r);
    };
    for (long long h = 1; h <= 16; ++h) {
      for (long long den = 1; den <= h; ++den) {
        push(h, den);
        push(-h, den);
      }
      for (long long num = -h; num <= h; ++num) push(num, h);
    }
    return out;
  }();
  return ladder;
}

}  // namespace

std::optional<OmegaPoint> collision_witness(const CrossRatioSpec& c1, const CrossRatioSpec& c2,
                                            int budget, std::uint64_t seed,
                                            long long base_height) {
  if (c1.ambient_k != c2.ambient_k)
    throw AmbientMismatch("witness search across different ambient k");
  if (budget < 1) throw InvalidParameter("witness budget must be >= 1");
  if (base_height < 2) throw InvalidParameter("witness sample height must be >= 2");
  int k = c1.ambient_k;
  int vars = k - 2;
  FactoredMap f1 = lc_map(c1);
  FactoredMap f2 = lc_map(c2);

  const std::vector<Rational>& ladder = small_rational_ladder();
  for (int attempt = 0; attempt < budget; ++attempt) {
    SampleRng rng(mix_seed(seed, c1, c2, attempt));
    long long height = base_height + 3 * attempt;

    // Specialize every non-pivot variable. Even attempts scan the
    // deterministic small-height ladder, odd attempts draw seeded random
    // values; both are needed for full coverage.
    int pivot;
    std::vector<Rational> values(static_cast<std::size_t>(vars), Rational(0));
    std::vector<Rational> taken;
    if (attempt % 2 == 0) {
      std::size_t step = static_cast<std::size_t>(attempt) / 2;
      pivot = 1 + static_cast<int>(step) % vars;
      std::size_t tuple_index = step / static_cast<std::size_t>(vars);
      bool ok = true;
      for (int v = 1; v <= vars && ok; ++v) {
        if (v == pivot) continue;
        Rational r = ladder[tuple_index % ladder.size()];
        tuple_index /= ladder.size();
        ok = std::find(taken.begin(), taken.end(), r) == taken.end();
        taken.push_back(r);
        values[static_cast<std::size_t>(v) - 1] = r;
      }
      if (!ok) continue;
    } else {
      pivot = 1 + (attempt / 2) % vars;
      bool sampled = true;
      try {
        for (int v = 1; v <= vars; ++v) {
          if (v == pivot) continue;
          Rational r = sample_coordinate(rng, height, taken);
          taken.push_back(r);
          values[static_cast<std::size_t>(v) - 1] = r;
        }
      } catch (const ExhaustedSampleSpace&) {
        sampled = false;
      }
      if (!sampled) continue;
    }

    // L1 = L2  <=>  num1 * den2 - num2 * den1 = 0 in the pivot variable.
    auto [num1, den1] = specialize(f1, pivot, values);
    auto [num2, den2] = specialize(f2, pivot, values);
    Poly equation = poly_mul(num1, den2);
    Poly rhs = poly_mul(num2, den1);
    equation.resize(std::max(equation.size(), rhs.size()), Rational(0));
    for (std::size_t i = 0; i < rhs.size(); ++i) equation[i] -= rhs[i];

    RootSet roots = rational_roots(std::move(equation));
    if (roots.identically_zero) {
      // The two maps agree on the whole specialized line: any admissible
      // pivot value yields a witness.
      try {
        roots.roots.push_back(sample_coordinate(rng, height, taken));
      } catch (const ExhaustedSampleSpace&) {
        continue;
      }
    }
    for (const Rational& candidate : roots.roots) {
      if (!valid_coordinate(candidate, taken)) continue;
      values[static_cast<std::size_t>(pivot) - 1] = candidate;
      OmegaPoint z = OmegaPoint::from_rationals(values);
      if (f1.evaluate(z) == f2.evaluate(z)) return z;
    }
  }
  return std::nullopt;
}

namespace {

Rational poly_eval(const Poly& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly poly_deriv(const Poly& p) {
  Poly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(Rational(static_cast<long long>(i)) * p[i]);
  if (out.empty()) out.push_back(Rational(0));
  return out;
}

bool poly_is_zero(const Poly& p) {
  return p.size() == 1 && p[0].is_zero();
}

Poly poly_rem(Poly a, const Poly& b) {
  poly_trim(a);
  while (a.size() >= b.size() && !poly_is_zero(a)) {
    Rational factor = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

// Number of distinct real roots, by Sturm's chain sign variations.
int distinct_real_roots(Poly p) {
  poly_trim(p);
  if (p.size() == 1) return 0;
  std::vector<Poly> chain;
  chain.push_back(p);
  Poly d = poly_deriv(p);
  poly_trim(d);
  chain.push_back(std::move(d));
  while (!poly_is_zero(chain.back()) && chain.back().size() > 1) {
    Poly r = poly_rem(chain[chain.size() - 2], chain.back());
    for (Rational& c : r) c = -c;
    poly_trim(r);
    if (poly_is_zero(r)) break;
    chain.push_back(std::move(r));
  }
  auto variations = [&](int direction) {
    int count = 0, prev = 0;
    for (const Poly& q : chain) {
      int s = q.back().sign();
      if (direction < 0 && (q.size() - 1) % 2 == 1) s = -s;
      if (s != 0) {
        if (prev != 0 && s != prev) ++count;
        prev = s;
      }
    }
    return count;
  };
  return variations(-1) - variations(+1);
}

// Divides out every factor of u and (u - 1).
Poly strip_excluded_roots(Poly p) {
  poly_trim(p);
  for (Rational root : {Rational(0), Rational(1)}) {
    while (p.size() > 1 && poly_eval(p, root).is_zero()) {
      // synthetic division by (u - root)
      Poly q(p.size() - 1, Rational(0));
      Rational carry(0);
      for (std::size_t i = p.size(); i-- > 1;) {
        carry = p[i] + carry * root;
        q[i - 1] = carry;
      }
      p = std::move(q);
    }
  }
  return p;
}

// True when p(u) < 0 for every real u outside {0, 1}.
bool negative_off_excluded_points(const Poly& p) {
  if (poly_is_zero(p)) return false;
  if (distinct_real_roots(strip_excluded_roots(p)) != 0) return false;
  return poly_eval(p, Rational(-1)).sign() < 0 &&
         poly_eval(p, Rational(BigInt(1), BigInt(2))).sign() < 0 &&
         poly_eval(p, Rational(2)).sign() < 0;
}

// True when p(u) has no real root outside {0, 1}.
bool no_real_roots_off_excluded_points(const Poly& p) {
  if (poly_is_zero(p)) return false;
  return distinct_real_roots(strip_excluded_roots(p)) == 0;
}

// Dense bivariate polynomial: coeff[i][j] is the z1^i z2^j coefficient.
using Poly2 = std::vector<std::vector<Rational>>;

Poly2 p2_constant(const Rational& c) { return {{c}}; }

Poly2 p2_mul(const Poly2& a, const Poly2& b) {
  Poly2 out(a.size() + b.size() - 1,
            std::vector<Rational>(a[0].size() + b[0].size() - 1, Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      for (std::size_t k2 = 0; k2 < b.size(); ++k2)
        for (std::size_t l = 0; l < b[k2].size(); ++l) out[i + k2][j + l] += a[i][j] * b[k2][l];
  return out;
}

Poly2 p2_from_factor(const LinearFactor& f) {
  switch (f.kind) {
    case FactorKind::Var:
      return f.i == 1 ? Poly2{{Rational(0)}, {Rational(1)}} : Poly2{{Rational(0), Rational(1)}};
    case FactorKind::VarMinusOne:
      return f.i == 1 ? Poly2{{Rational(-1)}, {Rational(1)}}
                      : Poly2{{Rational(-1), Rational(1)}};
    case FactorKind::VarDiff:
      // z1 - z2
      return Poly2{{Rational(0), Rational(-1)}, {Rational(1)}};
  }
  throw InvalidParameter("corrupt factor kind");
}

// Numerator and denominator of the map as bivariate polynomials (k = 4).
std::pair<Poly2, Poly2> p2_fraction(const FactoredMap& map) {
  Poly2 num = p2_constant(map.lambda());
  Poly2 den = p2_constant(Rational(1));
  for (const auto& [factor, exponent] : map.factors()) {
    Poly2 linear = p2_from_factor(factor);
    for (int e = 0; e < (exponent > 0 ? exponent : -exponent); ++e) {
      if (exponent > 0)
        num = p2_mul(num, linear);
      else
        den = p2_mul(den, linear);
    }
  }
  return {num, den};
}

}  // namespace

bool certify_no_real_collision_points(const CrossRatioSpec& c1, const CrossRatioSpec& c2) {
  if (c1.ambient_k != c2.ambient_k)
    throw AmbientMismatch("certifying across different ambient k");
  if (c1.ambient_k != 4) return false;

  auto [n1, d1] = p2_fraction(lc_map(c1));
  auto [n2, d2] = p2_fraction(lc_map(c2));
  Poly2 lhs = p2_mul(n1, d2);
  Poly2 rhs = p2_mul(n2, d1);
  std::size_t rows = std::max(lhs.size(), rhs.size());
  std::size_t cols = std::max(lhs[0].size(), rhs[0].size());
  Poly2 p(rows, std::vector<Rational>(cols, Rational(0)));
  for (std::size_t i = 0; i < lhs.size(); ++i)
    for (std::size_t j = 0; j < lhs[i].size(); ++j) p[i][j] += lhs[i][j];
  for (std::size_t i = 0; i < rhs.size(); ++i)
    for (std::size_t j = 0; j < rhs[i].size(); ++j) p[i][j] -= rhs[i][j];

  // Viewed as a quadratic in the pivot variable with polynomial coefficients
  // in the other variable: the pair has no real collision point when either
  // pivot shows a discriminant that stays strictly negative away from the
  // excluded values 0 and 1 (or a pivot-free residue with no admissible
  // real root).
  for (int pivot = 1; pivot <= 2; ++pivot) {
    std::vector<Poly> coeff(3, Poly{Rational(0)});
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p[i].size(); ++j) {
        if (p[i][j].is_zero()) continue;
        std::size_t vdeg = pivot == 1 ? i : j;
        std::size_t udeg = pivot == 1 ? j : i;
        if (vdeg > 2) throw InvalidParameter("collision equation of unexpected degree");
        Poly& target = coeff[vdeg];
        if (target.size() <= udeg) target.resize(udeg + 1, Rational(0));
        target[udeg] += p[i][j];
      }
    for (Poly& q : coeff) poly_trim(q);

    if (poly_is_zero(coeff[2]) && poly_is_zero(coeff[1])) {
      if (no_real_roots_off_excluded_points(coeff[0])) return true;
      continue;
    }
    Poly disc = poly_mul(coeff[1], coeff[1]);
    Poly four_ac = poly_mul(coeff[2], coeff[0]);
    disc.resize(std::max(disc.size(), four_ac.size()), Rational(0));
    for (std::size_t i = 0; i < four_ac.size(); ++i) disc[i] -= Rational(4) * four_ac[i];
    poly_trim(disc);
    if (negative_off_excluded_points(disc)) return true;
  }
  return false;
}

std::string TupleVerdict::str() const {
  switch (kind) {
    case Kind::ValidMap:
      return "valid-map n=" + std::to_string(n);
    case Kind::CollisionAt:
      return "collision at (" + std::to_string(first) + "," + std::to_string(second) + ")";
    case Kind::TooManyCoordinates:
      return "too-many-coordinates";
  }
  throw InvalidParameter("corrupt verdict");
}

TupleVerdict validate_tuple(const std::vector<CrossRatioSpec>& specs, int k) {
  if (specs.empty()) throw InvalidParameter("empty coordinate tuple");
  for (const CrossRatioSpec& spec : specs)
    if (spec.ambient_k != k) throw AmbientMismatch("tuple mixes ambient k values");
  if (static_cast<int>(specs.size()) > k - 2)
    return TupleVerdict{TupleVerdict::Kind::TooManyCoordinates};
  for (std::size_t i = 0; i < specs.size(); ++i)
    for (std::size_t j = i + 1; j < specs.size(); ++j)
      if (!collision_free(specs[i], specs[j]))
        return TupleVerdict{TupleVerdict::Kind::CollisionAt, 0, static_cast<int>(i) + 1,
                            static_cast<int>(j) + 1};
  return TupleVerdict{TupleVerdict::Kind::ValidMap, static_cast<int>(specs.size()) + 2};
}

GroupElement extend_to_group_element(const std::vector<CrossRatioSpec>& specs, int k,
                                     int ceiling) {
  TupleVerdict verdict = validate_tuple(specs, k);
  if (!verdict.valid()) throw InvalidParameter("cannot extend an invalid tuple: " + verdict.str());
  std::vector<FactoredMap> prefix;
  prefix.reserve(specs.size());
  for (const CrossRatioSpec& spec : specs) prefix.push_back(lc_map(spec));

  for (const Permutation& sigma : enumerate_group(k + 1, ceiling)) {
    GroupElement candidate = theta(k, sigma);
    if (std::equal(prefix.begin(), prefix.end(), candidate.coords.begin())) return candidate;
  }
  throw NoExtension("valid tuple admits no group-element extension; this is a bug");
}

std::string HoloMapDescriptor::json() const {
  std::string out = "{\"m\":" + std::to_string(m) + ",\"n\":" + std::to_string(n) +
                    ",\"sigma\":\"" + sigma.cycles() + "\",\"J\":[";
  for (std::size_t i = 0; i < index_tuple.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(index_tuple[i]);
  }
  out += "],\"coords\":[";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += "\"" + coords[i].str() + "\"";
  }
  return out + "]}";
}

namespace {

// Ordered tuples of `length` distinct values from {1,...,limit}, lexicographic.
std::vector<std::vector<int>> ordered_tuples(int limit, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == length) {
      out.push_back(current);
      return;
    }
    for (int v = 1; v <= limit; ++v) {
      if (std::find(current.begin(), current.end(), v) != current.end()) continue;
      current.push_back(v);
      self(self);
      current.pop_back();
    }
  };
  rec(rec);
  return out;
}

}  // namespace

std::vector<HoloMapDescriptor> enumerate_maps(int m, int n, int ceiling) {
  if (m < 3 || n < 3) throw InvalidParameter("configuration spaces need k >= 3");
  if (n > m)
    throw TargetLargerThanSource("no non-constant maps raise the marking: n = " +
                                 std::to_string(n) + " > m = " + std::to_string(m));
  std::vector<std::vector<int>> tuples = ordered_tuples(m - 2, n - 2);
  std::vector<HoloMapDescriptor> out;
  std::map<std::string, std::size_t> seen;
  for (const Permutation& sigma : enumerate_group(m + 1, ceiling)) {
    GroupElement element = theta(m, sigma);
    for (const std::vector<int>& J : tuples) {
      std::vector<FactoredMap> coords;
      std::string key;
      coords.reserve(J.size());
      for (int j : J) {
        coords.push_back(element.coords[static_cast<std::size_t>(j) - 1]);
        key += coords.back().str();
        key += "|";
      }
      if (seen.emplace(std::move(key), out.size()).second)
        out.push_back(HoloMapDescriptor{m, n, sigma, J, std::move(coords)});
    }
  }
  return out;
}

ForgetfulSpec::ForgetfulSpec(int m_, int n_, std::vector<int> J)
    : m(m_), n(n_), indices(std::move(J)) {
  if (n < 3 || n > m) throw InvalidParameter("projection needs 3 <= n <= m");
  if (static_cast<int>(indices.size()) != n - 2)
    throw LengthMismatch("projection needs n-2 indices");
  for (int v : indices)
    if (v < 1 || v > m - 2)
      throw OutOfRange("projection index " + std::to_string(v) + " outside 1.." +
                       std::to_string(m - 2));
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = i + 1; j < indices.size(); ++j)
      if (indices[i] == indices[j])
        throw RepeatedEntry("projection index " + std::to_string(indices[i]) + " repeated");
}

OmegaPoint apply_forgetful(const ForgetfulSpec& spec, const OmegaPoint& z) {
  if (z.ambient_k() != spec.m)
    throw LengthMismatch("projection expects a point of ambient k " + std::to_string(spec.m));
  std::vector<ProjPoint> coords;
  coords.reserve(spec.indices.size());
  for (int j : spec.indices) coords.push_back(z[static_cast<std::size_t>(j) - 1]);
  return OmegaPoint(std::move(coords));
}

namespace {

bool lift_intertwines(const ForgetfulSpec& proj, const GroupElement& lifted,
                      const GroupElement& target, int verify_points, std::uint64_t seed) {
  for (int t = 0; t < verify_points; ++t) {
    OmegaPoint z = sample_omega_point(proj.m, seed + static_cast<std::uint64_t>(t), 6 * proj.m);
    if (!(apply_forgetful(proj, apply(lifted, z)) == apply(target, apply_forgetful(proj, z))))
      return false;
  }
  return true;
}

}  // namespace

LiftResult lift_permutation(const Permutation& sigma, int m, const std::vector<int>& J,
                            int verify_points, std::uint64_t seed) {
  int n = static_cast<int>(J.size()) + 2;
  ForgetfulSpec proj(m, n, J);
  if (sigma.degree() != n + 1)
    throw DegreeMismatch("automorphism degree " + std::to_string(sigma.degree()) +
                         " does not match n+1 = " + std::to_string(n + 1));

  // Marked-point embedding: the projection keeps points 1, 2, 3 and
  // j_i + 3; conjugating sigma by it and fixing everything else gives the
  // lift directly.
  auto embed = [&](int r) { return r <= 3 ? r : J[static_cast<std::size_t>(r) - 4] + 3; };
  std::vector<int> images(static_cast<std::size_t>(m) + 1);
  for (int x = 1; x <= m + 1; ++x) images[static_cast<std::size_t>(x) - 1] = x;
  for (int r = 1; r <= n + 1; ++r)
    images[static_cast<std::size_t>(embed(r)) - 1] = embed(sigma(r));
  Permutation candidate = Permutation::from_one_line(std::move(images));

  GroupElement target = theta(n, sigma);
  if (lift_intertwines(proj, theta(m, candidate), target, verify_points, seed))
    return LiftResult{candidate, true};

  // Fallback: try every permutation supported on the embedded points.
  for (const Permutation& rho : enumerate_group(n + 1)) {
    std::vector<int> fallback(static_cast<std::size_t>(m) + 1);
    for (int x = 1; x <= m + 1; ++x) fallback[static_cast<std::size_t>(x) - 1] = x;
    for (int r = 1; r <= n + 1; ++r)
      fallback[static_cast<std::size_t>(embed(r)) - 1] = embed(rho(r));
    Permutation guess = Permutation::from_one_line(std::move(fallback));
    if (lift_intertwines(proj, theta(m, guess), target, verify_points, seed))
      return LiftResult{guess, false};
  }
  throw LiftVerificationFailed("no supported permutation intertwines with the projection");
}

}  // namespace torelli
