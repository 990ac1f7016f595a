#pragma once

#include <vector>

#include "cactus/perm.hpp"

namespace cactus {

// Set partition of {1..n} in canonical form: each block sorted ascending,
// blocks ordered by their minima.
class SetPartition {
 public:
  SetPartition() = default;
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  static SetPartition singletons(int n);

  int n() const { return n_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block_of(int x) const;
  int block_index_of(int x) const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition& a, const SetPartition& b) {
    return a.blocks_ <=> b.blocks_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_index_;  // block_index_[x-1] = index of block containing x
};

// Blocks = cycles of p, as a set partition.
SetPartition orbit_partition(const Permutation& p);

// True iff every block of pi is a union of cycles of p.
bool is_stable(const SetPartition& pi, const Permutation& p);

// All set partitions of {1..n} whose blocks are unions of cycles of p,
// enumerated deterministically (restricted-growth strings over the canonical
// cycle list, lexicographic).
std::vector<SetPartition> stable_partitions(const Permutation& p);

}  // namespace cactus
