#pragma once

#include <vector>

#include "cactus/cactus_tree.hpp"
#include "cactus/oracle.hpp"

namespace cactus {

// Edge labels of the cactus: row l is sigma_l with sigma_1 = id and
// sigma_l = (alpha_l ... alpha_r)^{-1} for l >= 2. The l-color edge holding
// symbol g carries label sigma_l(g).
std::vector<Permutation> edge_labels(const Factorization& c);

// Partitioned cactus -> cactus tree. Throws InternalCheckError if one of the
// structural guarantees (run lengths, slot uniqueness) fails.
CactusTree forward(const PartitionedCactus& pc);

// Cactus tree -> partitioned cactus. Throws TreeError on malformed input;
// never throws on forward images.
PartitionedCactus inverse(const CactusTree& t);

// All trees with content a, up to symbol renaming. Hard guard: total(a) <= 3.
std::vector<CactusTree> enumerate_cactus_trees(const AVector& a);

struct InternalCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cactus
