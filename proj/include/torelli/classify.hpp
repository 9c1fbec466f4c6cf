#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "torelli/group.hpp"

namespace torelli {

// An ordered quadruple of distinct marked-point indices in {1,...,k+1},
// naming the cross-ratio map [p_{i1}, p_{i2}, p_{i3}, p_{i4}].
struct CrossRatioSpec {
  int ambient_k;
  std::array<int, 4> indices;

  CrossRatioSpec(int k, std::array<int, 4> idx);

  bool operator==(const CrossRatioSpec&) const = default;

  std::string str() const;  // "i1,i2,i3,i4"
  static CrossRatioSpec parse(const std::string& text, int k);
};

// All (k+1)k(k-1)(k-2) ordered quadruples, lexicographic.
std::vector<CrossRatioSpec> all_cross_ratio_specs(int k);

// The cross-ratio coordinate map determined by the quadruple, as a
// canonical factored map into the thrice-punctured sphere.
FactoredMap lc_map(const CrossRatioSpec& spec);

// True exactly when the quadruples agree in three slots and differ in the
// remaining one, for some of the four equivalent representations of the
// second quadruple; the value equation then has no solution on the
// configuration domain. Returns the differing slot (1..4) when so.
std::optional<int> collision_case(const CrossRatioSpec& c1, const CrossRatioSpec& c2);
bool collision_free(const CrossRatioSpec& c1, const CrossRatioSpec& c2);

// Brute-force counterpart to the combinatorial criterion: hunt for an exact
// configuration point where the two maps take the same value, specializing
// all but one variable and solving the residual equation (degree at most 2)
// over the rationals. std::nullopt means the budget ran out, not that no
// witness exists.
std::optional<OmegaPoint> collision_witness(const CrossRatioSpec& c1, const CrossRatioSpec& c2,
                                            int budget, std::uint64_t seed = 0,
                                            long long base_height = 20);

// Exact certificate that the collision locus of the two maps carries no
// real point of the configuration domain at all, so no rational witness can
// exist (some colliding pairs meet only at non-real points, e.g. where the
// residual discriminant is -3 times a square). Sound but not complete, and
// implemented for ambient k = 4 only: false means "no certificate", never
// "real points exist".
bool certify_no_real_collision_points(const CrossRatioSpec& c1, const CrossRatioSpec& c2);

struct TupleVerdict {
  enum class Kind { ValidMap, CollisionAt, TooManyCoordinates };
  Kind kind;
  int n = 0;       // target marking for ValidMap
  int first = 0;   // 1-based pair for CollisionAt
  int second = 0;

  bool valid() const { return kind == Kind::ValidMap; }
  std::string str() const;
};

// Decides whether (L_{C_1},...,L_{C_l}) maps the k-configuration into the
// (l+2)-configuration: at most k-2 coordinates, all pairs collision-free.
TupleVerdict validate_tuple(const std::vector<CrossRatioSpec>& specs, int k);

// Completes a valid coordinate tuple to a full group element whose leading
// coordinates are the given maps.
GroupElement extend_to_group_element(const std::vector<CrossRatioSpec>& specs, int k,
                                     int ceiling = kDefaultDegreeCeiling);

// A classified holomorphic map between configuration domains: the source
// automorphism and the coordinate subset that realize it.
struct HoloMapDescriptor {
  int m;
  int n;
  Permutation sigma;
  std::vector<int> index_tuple;
  std::vector<FactoredMap> coords;

  std::string json() const;
};

// Every non-constant holomorphic map from the m-configuration to the
// n-configuration, enumerated as (sigma, J) pairs and deduplicated by
// canonical coordinate tuple (first witness in lexicographic order kept).
std::vector<HoloMapDescriptor> enumerate_maps(int m, int n,
                                              int ceiling = kDefaultDegreeCeiling);

// Coordinate projection between configuration domains.
struct ForgetfulSpec {
  int m;
  int n;
  std::vector<int> indices;  // ordered, distinct, in {1,...,m-2}

  ForgetfulSpec(int m_, int n_, std::vector<int> J);
};

OmegaPoint apply_forgetful(const ForgetfulSpec& spec, const OmegaPoint& z);

// Lifts an automorphism of the n-configuration through the projection: the
// returned permutation fixes every marked point the projection forgets and
// intertwines the two automorphisms, verified at sampled points before
// returning.
struct LiftResult {
  Permutation sigma_hat;
  // True when the closed-form embedding conjugation produced the verified
  // lift; false when the exhaustive fallback search was needed.
  bool direct_construction = true;
};

LiftResult lift_permutation(const Permutation& sigma, int m, const std::vector<int>& J,
                            int verify_points = 5, std::uint64_t seed = 99);

}  // namespace torelli
