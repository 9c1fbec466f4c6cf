#include "torelli/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace torelli {

Permutation::Permutation(int degree) {
  if (degree < 1) throw InvalidParameter("permutation degree must be >= 1");
  images_.resize(static_cast<std::size_t>(degree));
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_one_line(std::vector<int> images) {
  if (images.empty()) throw InvalidParameter("permutation degree must be >= 1");
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()))
      throw OutOfRange("image " + std::to_string(v) + " outside 1.." +
                       std::to_string(images.size()));
    if (seen[static_cast<std::size_t>(v) - 1])
      throw RepeatedEntry("image " + std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v) - 1] = true;
  }
  Permutation p(static_cast<int>(images.size()));
  p.images_ = std::move(images);
  return p;
}

int Permutation::operator()(int x) const {
  if (x < 1 || x > degree()) throw OutOfRange("point " + std::to_string(x) + " outside domain");
  return images_[static_cast<std::size_t>(x) - 1];
}

Permutation Permutation::compose(const Permutation& tau) const {
  if (degree() != tau.degree()) throw DegreeMismatch("composing permutations of different degree");
  std::vector<int> images(images_.size());
  for (int x = 1; x <= degree(); ++x)
    images[static_cast<std::size_t>(x) - 1] = (*this)(tau(x));
  Permutation p(degree());
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int x = 1; x <= degree(); ++x)
    images[static_cast<std::size_t>(images_[static_cast<std::size_t>(x) - 1]) - 1] = x;
  Permutation p(degree());
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= degree(); ++x)
    if ((*this)(x) != x) return false;
  return true;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (int start = 1; start <= degree(); ++start) {
    if (done[static_cast<std::size_t>(start) - 1] || (*this)(start) == start) continue;
    out += "(";
    int x = start;
    bool first = true;
    while (!done[static_cast<std::size_t>(x) - 1]) {
      done[static_cast<std::size_t>(x) - 1] = true;
      if (!first) out += " ";
      out += std::to_string(x);
      first = false;
      x = (*this)(x);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::string Permutation::one_line() const {
  std::string out = "[";
  for (int i = 0; i < degree(); ++i) {
    if (i) out += ",";
    out += std::to_string(images_[static_cast<std::size_t>(i)]);
  }
  return out + "]";
}

namespace {

std::vector<int> parse_int_list(const std::string& body, const char* what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    while (pos < body.size() && (body[pos] == ' ' || body[pos] == ',' || body[pos] == '\t')) ++pos;
    if (pos >= body.size()) break;
    if (!std::isdigit(static_cast<unsigned char>(body[pos])))
      throw MalformedInput(std::string("unexpected character in ") + what + ": '" + body[pos] + "'");
    int value = 0;
    while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) {
      value = value * 10 + (body[pos] - '0');
      ++pos;
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace

Permutation parse_permutation(const std::string& text, int degree) {
  if (degree < 1) throw InvalidParameter("permutation degree must be >= 1");
  auto b = text.find_first_not_of(" \t");
  auto e = text.find_last_not_of(" \t");
  if (b == std::string::npos) throw MalformedInput("empty permutation");
  std::string s = text.substr(b, e - b + 1);

  if (s.front() == '[') {
    if (s.back() != ']') throw MalformedInput("unterminated one-line notation");
    std::vector<int> images = parse_int_list(s.substr(1, s.size() - 2), "one-line notation");
    if (static_cast<int>(images.size()) != degree)
      throw MalformedInput("one-line notation lists " + std::to_string(images.size()) +
                           " images for degree " + std::to_string(degree));
    return Permutation::from_one_line(std::move(images));
  }

  if (s.front() != '(') throw MalformedInput("permutation must be cycles or one-line notation");
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == ' ' || s[pos] == '\t') {
      ++pos;
      continue;
    }
    if (s[pos] != '(') throw MalformedInput("expected '(' in cycle notation");
    auto close = s.find(')', pos);
    if (close == std::string::npos) throw MalformedInput("unterminated cycle");
    std::vector<int> cycle = parse_int_list(s.substr(pos + 1, close - pos - 1), "cycle");
    pos = close + 1;
    for (int v : cycle) {
      if (v < 1 || v > degree)
        throw OutOfRange("cycle entry " + std::to_string(v) + " outside 1.." + std::to_string(degree));
      if (seen[static_cast<std::size_t>(v) - 1])
        throw RepeatedEntry("cycle entry " + std::to_string(v) + " repeated");
      seen[static_cast<std::size_t>(v) - 1] = true;
    }
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i)
      images[static_cast<std::size_t>(cycle[i]) - 1] = cycle[i + 1];
    if (cycle.size() > 1) images[static_cast<std::size_t>(cycle.back()) - 1] = cycle.front();
  }
  return Permutation::from_one_line(std::move(images));
}

std::vector<Permutation> enumerate_group(int degree, int ceiling) {
  if (degree < 1) throw InvalidParameter("permutation degree must be >= 1");
  if (degree > ceiling)
    throw DegreeTooLarge("degree " + std::to_string(degree) + " above enumeration ceiling " +
                         std::to_string(ceiling));
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace torelli
