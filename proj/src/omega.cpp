#include "torelli/omega.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace torelli {

OmegaPoint::OmegaPoint(std::vector<ProjPoint> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InvalidParameter("configuration point needs k >= 3");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const ProjPoint& p = coords_[i];
    if (p.is_infinity()) throw OutOfRange("coordinate at infinity");
    if (p.is_zero() || p.is_one())
      throw OutOfRange("coordinate equal to 0 or 1");
    for (std::size_t j = i + 1; j < coords_.size(); ++j)
      if (p == coords_[j]) throw RepeatedEntry("coinciding coordinates");
  }
}

OmegaPoint OmegaPoint::from_rationals(const std::vector<Rational>& values) {
  std::vector<ProjPoint> pts;
  pts.reserve(values.size());
  for (const Rational& v : values) pts.emplace_back(v);
  return OmegaPoint(std::move(pts));
}

std::string OmegaPoint::str() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += coords_[i].str();
  }
  return out;
}

OmegaPoint OmegaPoint::parse(const std::string& text) {
  std::vector<ProjPoint> pts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    // trim surrounding spaces
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw MalformedInput("empty coordinate in point");
    pts.push_back(ProjPoint::parse(item.substr(b, e - b + 1)));
  }
  if (pts.empty()) throw MalformedInput("empty point");
  return OmegaPoint(std::move(pts));
}

std::uint64_t SampleRng::below(std::uint64_t n) {
  if (n == 0) throw InvalidParameter("empty draw range");
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % n);
  std::uint64_t r = eng_();
  while (r >= limit) r = eng_();
  return r % n;
}

Rational SampleRng::rational(long long height) {
  if (height < 1) throw InvalidParameter("sample height must be >= 1");
  auto h = static_cast<std::uint64_t>(height);
  long long num = static_cast<long long>(below(2 * h + 1)) - height;
  long long den = static_cast<long long>(below(h)) + 1;
  return Rational(BigInt(num), BigInt(den));
}

Rational sample_coordinate(SampleRng& rng, long long height,
                           const std::vector<Rational>& taken) {
  const Rational zero(0), one(1);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Rational r = rng.rational(height);
    if (r == zero || r == one) continue;
    if (std::find(taken.begin(), taken.end(), r) != taken.end()) continue;
    return r;
  }
  throw ExhaustedSampleSpace("could not sample a fresh coordinate at height " +
                             std::to_string(height));
}

OmegaPoint sample_omega_point(int k, std::uint64_t seed, long long height) {
  if (k < 3) throw InvalidParameter("configuration space needs k >= 3");
  if (height < k) throw InvalidParameter("sample height must be >= k");
  SampleRng rng(seed);
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(k) - 2);
  for (int i = 0; i < k - 2; ++i) values.push_back(sample_coordinate(rng, height, values));
  return OmegaPoint::from_rationals(values);
}

}  // namespace torelli
