#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "torelli/proj_point.hpp"

namespace torelli {

// A point of the configuration domain: k-2 finite coordinates, none equal
// to 0 or 1, pairwise distinct.
class OmegaPoint {
 public:
  explicit OmegaPoint(std::vector<ProjPoint> coords);
  static OmegaPoint from_rationals(const std::vector<Rational>& values);

  int ambient_k() const { return static_cast<int>(coords_.size()) + 2; }
  std::size_t size() const { return coords_.size(); }
  const ProjPoint& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<ProjPoint>& coords() const { return coords_; }

  bool operator==(const OmegaPoint& o) const { return coords_ == o.coords_; }

  std::string str() const;  // comma-separated coordinate values
  static OmegaPoint parse(const std::string& text);

 private:
  std::vector<ProjPoint> coords_;
};

// Deterministic bounded draws on top of the fixed-width mt19937_64 stream,
// so sampled points depend only on the seed, not on the platform.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t n);

  // A random rational with |numerator| <= height, 1 <= denominator <= height.
  Rational rational(long long height);

 private:
  std::mt19937_64 eng_;
};

// One random coordinate valid alongside `taken`: finite, not 0 or 1 and
// distinct from every entry of `taken`. Throws ExhaustedSampleSpace when the
// rejection loop cannot find one.
Rational sample_coordinate(SampleRng& rng, long long height,
                           const std::vector<Rational>& taken);

// Deterministic function of (k, seed, height).
OmegaPoint sample_omega_point(int k, std::uint64_t seed, long long height);

}  // namespace torelli
