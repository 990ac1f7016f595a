#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cactus {

// Permutation of {1..n}, stored as the image array: images()[i-1] = sigma(i).
// All public interfaces are 1-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // gamma_n = (1 2 ... n): 1 -> 2 -> ... -> n -> 1.
  static Permutation long_cycle(int n);
  // Builds a permutation of {1..n} from disjoint cycles; omitted points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const;
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;

  // Cycles in canonical form: each cycle starts at its minimum, cycles sorted
  // by their minima.
  std::vector<std::vector<int>> cycles() const;
  // Cycle lengths sorted descending.
  std::vector<int> cycle_type() const;
  int num_cycles() const;

  // Lexicographic successor of the image array; false once past the last one.
  bool next_lex();

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

// compose(s, t) = s after t: x -> s(t(x)).
Permutation compose(const Permutation& s, const Permutation& t);

}  // namespace cactus
