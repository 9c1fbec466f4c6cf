#include "torelli/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace torelli {

std::string GroupElement::coords_str() const {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += " , ";
    out += coords[i].str();
  }
  return out;
}

OmegaPoint apply(const GroupElement& element, const OmegaPoint& z) {
  std::vector<ProjPoint> values;
  values.reserve(element.coords.size());
  for (const FactoredMap& coord : element.coords) values.push_back(coord.evaluate(z));
  return OmegaPoint(std::move(values));
}

GroupElement theta(int k, const Permutation& sigma) {
  if (k < 3) throw InvalidParameter("configuration space needs k >= 3");
  if (sigma.degree() != k + 1)
    throw DegreeMismatch("permutation degree " + std::to_string(sigma.degree()) +
                         " does not match k+1 = " + std::to_string(k + 1));
  Permutation inv = sigma.inverse();
  auto marked = [&](int r) { return SymbolicPoint::marked(inv(r), k); };
  std::vector<FactoredMap> coords;
  coords.reserve(static_cast<std::size_t>(k) - 2);
  for (int j = 1; j <= k - 2; ++j)
    coords.push_back(cross_ratio_symbolic(marked(1), marked(2), marked(3), marked(3 + j), k));
  return GroupElement{k, std::move(coords), sigma};
}

Generators standard_generators(int k) {
  if (k < 3) throw InvalidParameter("configuration space needs k >= 3");
  std::vector<FactoredMap> a_coords;
  for (int j = 1; j <= k - 2; ++j)
    a_coords.push_back(FactoredMap::from_factor(k, LinearFactor::var(j), -1));

  int last = k - 2;
  std::vector<FactoredMap> b_coords;
  // z_{k-2} / (z_{k-2} - 1)
  b_coords.push_back(FactoredMap::from_factor(k, LinearFactor::var(last))
                         .multiply(FactoredMap::from_factor(k, LinearFactor::var_minus_one(last), -1)));
  // z_{k-2} / (z_{k-2} - z_j) = -z_{k-2} * (z_j - z_{k-2})^-1 for j < k-2
  for (int j = 1; j <= k - 3; ++j)
    b_coords.push_back(
        FactoredMap::from_factor(k, LinearFactor::var(last), 1, Rational(-1))
            .multiply(FactoredMap::from_factor(k, LinearFactor::var_diff(j, last), -1)));

  return Generators{GroupElement{k, std::move(a_coords), std::nullopt},
                    GroupElement{k, std::move(b_coords), std::nullopt}};
}

std::vector<Permutation> find_permutations(int k, const GroupElement& element, int ceiling) {
  if (element.ambient_k != k)
    throw AmbientMismatch("element of ambient k " + std::to_string(element.ambient_k) +
                          " searched in degree " + std::to_string(k + 1));
  if (static_cast<int>(element.coords.size()) != k - 2)
    throw LengthMismatch("element must have k-2 coordinate maps");

  // Prefilter by the value vector at one sampled point, then confirm on
  // canonical forms.
  OmegaPoint probe = sample_omega_point(k, 2024, 4 * k + 8);
  std::vector<ProjPoint> target;
  for (const FactoredMap& coord : element.coords) target.push_back(coord.evaluate(probe));

  std::vector<Permutation> matches;
  for (const Permutation& sigma : enumerate_group(k + 1, ceiling)) {
    GroupElement candidate = theta(k, sigma);
    bool ok = true;
    for (std::size_t j = 0; j < target.size() && ok; ++j)
      ok = candidate.coords[j].evaluate(probe) == target[j];
    if (ok && candidate.coords == element.coords) matches.push_back(sigma);
  }
  if (matches.empty()) throw NotAGroupElement("no permutation induces the given element");
  return matches;
}

Permutation find_permutation(int k, const GroupElement& element, int ceiling) {
  return find_permutations(k, element, ceiling).front();
}

std::vector<Permutation> find_permutations(
    int k, const std::function<OmegaPoint(const OmegaPoint&)>& evaluator, int ceiling,
    int sample_points, std::uint64_t seed) {
  std::vector<OmegaPoint> probes;
  std::vector<OmegaPoint> images;
  for (int t = 0; t < sample_points; ++t) {
    probes.push_back(sample_omega_point(k, seed + static_cast<std::uint64_t>(t), 4 * k + 8));
    images.push_back(evaluator(probes.back()));
  }
  std::vector<Permutation> matches;
  for (const Permutation& sigma : enumerate_group(k + 1, ceiling)) {
    GroupElement candidate = theta(k, sigma);
    bool ok = true;
    for (int t = 0; t < sample_points && ok; ++t)
      ok = apply(candidate, probes[static_cast<std::size_t>(t)]) ==
           images[static_cast<std::size_t>(t)];
    if (ok) matches.push_back(sigma);
  }
  if (matches.empty()) throw NotAGroupElement("no permutation matches the evaluator");
  return matches;
}

std::vector<GroupElement> closure(int k, const std::vector<GroupElement>& generators,
                                  int ceiling) {
  if (generators.empty()) throw InvalidParameter("closure of an empty generating set");
  std::vector<Permutation> gen_perms;
  for (const GroupElement& g : generators) {
    // a provenance tag is only trusted if it reproduces the coordinates
    if (g.source_perm && theta(k, *g.source_perm).coords == g.coords) {
      gen_perms.push_back(*g.source_perm);
      continue;
    }
    try {
      gen_perms.push_back(find_permutation(k, g, ceiling));
    } catch (const NotAGroupElement&) {
      throw MissingProvenance("generator cannot be resolved to a source permutation");
    }
  }

  std::set<Permutation> known;
  std::deque<Permutation> frontier;
  Permutation id(k + 1);
  known.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation current = frontier.front();
    frontier.pop_front();
    for (const Permutation& g : gen_perms) {
      Permutation next = g.compose(current);
      if (known.insert(next).second) frontier.push_back(next);
    }
  }

  std::vector<GroupElement> out;
  out.reserve(known.size());
  for (const Permutation& sigma : known) out.push_back(theta(k, sigma));
  return out;
}

std::vector<Permutation> kernel_theta3() {
  GroupElement id3 = theta(3, Permutation(4));
  std::vector<Permutation> kernel;
  for (const Permutation& sigma : enumerate_group(4))
    if (theta(3, sigma).coords == id3.coords) kernel.push_back(sigma);
  return kernel;
}

bool Catalog::contains(const FactoredMap& f) const {
  return std::binary_search(functions.begin(), functions.end(), f);
}

Catalog coordinate_catalog(int k, int ceiling) {
  if (k < 3) throw InvalidParameter("configuration space needs k >= 3");
  std::set<FactoredMap> seen;
  for (const Permutation& sigma : enumerate_group(k + 1, ceiling))
    for (FactoredMap& coord : theta(k, sigma).coords) seen.insert(std::move(coord));
  return Catalog{k, std::vector<FactoredMap>(seen.begin(), seen.end())};
}

std::string element_fixture_line(const GroupElement& element) {
  if (!element.source_perm)
    throw MissingProvenance("fixture lines need the source permutation");
  return element.source_perm->cycles() + "\t" + element.coords_str();
}

GroupElement parse_element_fixture_line(const std::string& line, int k) {
  auto tab = line.find('\t');
  if (tab == std::string::npos) throw MalformedInput("fixture line without tab separator");
  Permutation sigma = parse_permutation(line.substr(0, tab), k + 1);
  std::vector<FactoredMap> coords;
  std::string rest = line.substr(tab + 1);
  std::size_t pos = 0;
  while (pos != std::string::npos) {
    std::size_t next = rest.find(" , ", pos);
    std::string piece =
        next == std::string::npos ? rest.substr(pos) : rest.substr(pos, next - pos);
    coords.push_back(FactoredMap::parse(piece, k));
    pos = next == std::string::npos ? next : next + 3;
  }
  if (static_cast<int>(coords.size()) != k - 2)
    throw LengthMismatch("fixture line lists " + std::to_string(coords.size()) +
                         " coordinates for k = " + std::to_string(k));
  return GroupElement{k, std::move(coords), std::move(sigma)};
}

}  // namespace torelli
