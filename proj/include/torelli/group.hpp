#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "torelli/factored_map.hpp"
#include "torelli/permutation.hpp"

namespace torelli {

// Default enumeration ceiling: permutation degree 8 (40320 elements), i.e.
// automorphism groups up to k = 7.
inline constexpr int kDefaultDegreeCeiling = 8;

// One automorphism of the configuration domain, as its tuple of coordinate
// maps. `source_perm` records the permutation it was built from, when known.
struct GroupElement {
  int ambient_k;
  std::vector<FactoredMap> coords;
  std::optional<Permutation> source_perm;

  bool same_map(const GroupElement& o) const {
    return ambient_k == o.ambient_k && coords == o.coords;
  }

  // " , "-joined canonical coordinate serializations.
  std::string coords_str() const;
};

// Applies the element coordinatewise; the result is again a valid
// configuration point.
OmegaPoint apply(const GroupElement& element, const OmegaPoint& z);

// The automorphism induced by a permutation of the k+1 marked points
// (inf, 0, 1, z_1, ..., z_{k-2}): coordinate j is the cross-ratio
// [p_{s(1)}, p_{s(2)}, p_{s(3)}, p_{s(3+j)}] with s the inverse permutation.
GroupElement theta(int k, const Permutation& sigma);

// The two standard generators, built directly from their closed forms:
// A = (z_1^-1, ..., z_{k-2}^-1),
// B = (z_{k-2}/(z_{k-2}-1), z_{k-2}/(z_{k-2}-z_1), ..., z_{k-2}/(z_{k-2}-z_{k-3})).
struct Generators {
  GroupElement A;
  GroupElement B;
};
Generators standard_generators(int k);

// All permutations mapping to the given element (one for k >= 4; the full
// kernel coset of size 4 for k = 3). Throws NotAGroupElement when empty.
std::vector<Permutation> find_permutations(int k, const GroupElement& element,
                                           int ceiling = kDefaultDegreeCeiling);
Permutation find_permutation(int k, const GroupElement& element,
                             int ceiling = kDefaultDegreeCeiling);

// Black-box variant: matches an opaque evaluator against every candidate at
// sampled points only (no canonical confirmation is possible).
std::vector<Permutation> find_permutations(
    int k, const std::function<OmegaPoint(const OmegaPoint&)>& evaluator,
    int ceiling = kDefaultDegreeCeiling, int sample_points = 3, std::uint64_t seed = 0);

// The subgroup generated by the given elements. Composition is performed on
// the source permutations (resolved if missing), never symbolically; the
// result is sorted by one-line order of the source permutation.
std::vector<GroupElement> closure(int k, const std::vector<GroupElement>& generators,
                                  int ceiling = kDefaultDegreeCeiling);

// All permutations of degree 4 inducing the identity automorphism for k = 3.
std::vector<Permutation> kernel_theta3();

// All distinct coordinate maps over the whole group, canonically sorted.
struct Catalog {
  int ambient_k;
  std::vector<FactoredMap> functions;

  bool contains(const FactoredMap& f) const;
};
Catalog coordinate_catalog(int k, int ceiling = kDefaultDegreeCeiling);

// Fixture-file line format for group elements: "<cycles>\t<coordinate-tuple>".
std::string element_fixture_line(const GroupElement& element);
GroupElement parse_element_fixture_line(const std::string& line, int k);

}  // namespace torelli
