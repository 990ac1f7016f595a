#pragma once

#include <functional>
#include <map>
#include <vector>

#include "cactus/subsets.hpp"

namespace cactus {

// Finitely supported map from nonempty subsets of {1..r} to nonnegative
// counts a_t. Zero entries are not stored.
struct AVector {
  int r = 0;
  std::map<unsigned, int> counts;  // mask -> a_t > 0

  int at(unsigned mask) const {
    auto it = counts.find(mask);
    return it == counts.end() ? 0 : it->second;
  }
  int total() const {  // n = sum of all a_t
    int s = 0;
    for (auto& [m, a] : counts) s += a;
    return s;
  }
  // p_l = sum over t not containing l of a_t, plus 1 for l = 1.
  std::vector<int> derived_p() const;

  friend bool operator==(const AVector&, const AVector&) = default;
  friend auto operator<=>(const AVector&, const AVector&) = default;
};

// All a >= 0 indexed by nonempty subsets of {1..r} with sum(a) = total and
// sum_{t : l not in t} a_t = target[l-1] for every color l. Deterministic
// order (entries vary over ascending-mask coordinates).
std::vector<AVector> enumerate_avectors_with_targets(int r, int total,
                                                     const std::vector<int>& target);

// Solutions of the constraint system tying a to a p-vector:
//   sum a = n,  p_1 = 1 + sum_{t: 1 not in t} a_t,  p_l = sum_{t: l not in t} a_t.
std::vector<AVector> enumerate_avectors(int n, int r, const std::vector<int>& p);

// Every a >= 0 with sum(a) = total, no p constraint.
std::vector<AVector> enumerate_avectors_by_total(int r, int total);

}  // namespace cactus
