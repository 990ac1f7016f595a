#pragma once

#include <vector>

#include "cactus/ints.hpp"

namespace cactus {

// Stirling numbers of the second kind S(q, p): partitions of a q-set into p blocks.
Int stirling2(int q, int p);

// Signed Stirling numbers of the first kind s(p, q):
// sum_q s(p, q) x^q = x (x-1) ... (x-p+1).
Int stirling1_signed(int p, int q);

// Bell number B(m) = number of set partitions of an m-set.
Int bell(int m);

// Integer partitions of n, each as a descending part list, enumerated in
// deterministic (reverse-lexicographic) order. partitions_of(0) = { [] }.
std::vector<std::vector<int>> partitions_of(int n);

}  // namespace cactus
