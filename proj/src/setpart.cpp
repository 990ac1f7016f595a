#include "cactus/setpart.hpp"

#include <algorithm>
#include <stdexcept>

namespace cactus {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n < 0) throw std::invalid_argument("SetPartition: negative n");
  std::vector<char> seen(n + 1, 0);
  int covered = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1 || x > n || seen[x]) throw std::invalid_argument("SetPartition: not a partition of {1..n}");
      seen[x] = 1;
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("SetPartition: does not cover {1..n}");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  block_index_.assign(n, -1);
  for (size_t i = 0; i < blocks_.size(); ++i)
    for (int x : blocks_[i]) block_index_[x - 1] = static_cast<int>(i);
}

SetPartition SetPartition::singletons(int n) {
  std::vector<std::vector<int>> b;
  for (int x = 1; x <= n; ++x) b.push_back({x});
  return SetPartition(n, std::move(b));
}

const std::vector<int>& SetPartition::block_of(int x) const {
  return blocks_[block_index_of(x)];
}

int SetPartition::block_index_of(int x) const {
  if (x < 1 || x > n_) throw std::out_of_range("SetPartition: point out of range");
  return block_index_[x - 1];
}

SetPartition orbit_partition(const Permutation& p) {
  return SetPartition(p.size(), p.cycles());
}

bool is_stable(const SetPartition& pi, const Permutation& p) {
  if (pi.n() != p.size()) throw std::invalid_argument("is_stable: size mismatch");
  for (int x = 1; x <= p.size(); ++x)
    if (pi.block_index_of(p(x)) != pi.block_index_of(x)) return false;
  return true;
}

std::vector<SetPartition> stable_partitions(const Permutation& p) {
  const auto cyc = p.cycles();
  const int m = static_cast<int>(cyc.size());
  std::vector<SetPartition> out;
  std::vector<int> rgs(m, 0);
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  while (true) {
    int nb = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> blocks(nb);
    for (int i = 0; i < m; ++i)
      blocks[rgs[i]].insert(blocks[rgs[i]].end(), cyc[i].begin(), cyc[i].end());
    out.emplace_back(p.size(), std::move(blocks));

    int i = m - 1;
    for (; i > 0; --i) {
      int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
      if (rgs[i] < cap) break;
    }
    if (i == 0) break;
    ++rgs[i];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  return out;
}

}  // namespace cactus
