#pragma once

#include <compare>
#include <string>
#include <vector>

#include "torelli/errors.hpp"

namespace torelli {

// An element of the symmetric group on {1,...,degree}, stored in one-line
// notation. Cycle notation is I/O only.
class Permutation {
 public:
  explicit Permutation(int degree);  // identity
  static Permutation from_one_line(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const;  // image of x, 1-based

  // compose(sigma, tau)(x) = sigma(tau(x)): tau is applied first.
  Permutation compose(const Permutation& tau) const;
  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  std::strong_ordering operator<=>(const Permutation& o) const {
    return images_ <=> o.images_;
  }

  const std::vector<int>& images() const { return images_; }

  // Cycle notation with fixed points omitted; the identity is "()".
  std::string cycles() const;
  std::string one_line() const;  // "[i1,...,in]"

 private:
  std::vector<int> images_;
};

// Accepts cycle notation "(a b ...)(...)" (spaces or commas between entries)
// or one-line notation "[i1,...,in]".
Permutation parse_permutation(const std::string& text, int degree);

inline std::string format_cycles(const Permutation& sigma) { return sigma.cycles(); }

// All degree! permutations in lexicographic one-line order.
std::vector<Permutation> enumerate_group(int degree, int ceiling = 8);

}  // namespace torelli
