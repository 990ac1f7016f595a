#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "cactus/ints.hpp"
#include "cactus/perm.hpp"
#include "cactus/setpart.hpp"

namespace cactus {

// An ordered factorization alpha_1 ... alpha_r = gamma_n (composition acts
// rightmost-first). This tuple is also the cactus carrier.
struct Factorization {
  int n = 0;
  std::vector<Permutation> alphas;

  int r() const { return static_cast<int>(alphas.size()); }
  bool product_is_long_cycle() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
  friend auto operator<=>(const Factorization&, const Factorization&) = default;
};

using Cactus = Factorization;

struct PartitionedCactus {
  Factorization cactus;
  std::vector<SetPartition> partitions;  // partitions[i-1] stable under alphas[i-1]

  friend bool operator==(const PartitionedCactus&, const PartitionedCactus&) = default;
  friend auto operator<=>(const PartitionedCactus&, const PartitionedCactus&) = default;
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration size guard. Default: 1e8 elementary steps.
struct Budget {
  Int limit = 100000000;
  void charge(const Int& steps, const char* what) const;
};

// Visits all (n!)^(r-1) factorizations in lexicographic order of
// (alpha_1,...,alpha_{r-1}) image arrays; alpha_r is forced.
void for_each_factorization(int n, int r, const Budget& budget,
                            const std::function<void(const Factorization&)>& visit);
std::vector<Factorization> enumerate_factorizations(int n, int r, const Budget& budget = {});

// Visits every factorization together with every tuple of stable partitions.
void for_each_partitioned_cactus(int n, int r, const Budget& budget,
                                 const std::function<void(const PartitionedCactus&)>& visit);
std::vector<PartitionedCactus> enumerate_partitioned_cacti(int n, int r, const Budget& budget = {});

// Exact number of partitioned cacti the above would visit (used for the guard).
Int partitioned_cactus_total(int n, int r, const Budget& budget);

// k^n table keyed by cycle counts (q_1..q_r); nonzero entries only.
CountTable count_by_cycle_counts(int n, int r, const Budget& budget = {});

// Table keyed by the tuple of cycle types (each a descending part list).
using TypeTable = std::map<std::vector<std::vector<int>>, Int>;
TypeTable count_by_cycle_types(int n, int r, const Budget& budget = {});

// Collapses a type table to cycle counts (number of parts per coordinate).
CountTable aggregate_types_to_counts(const TypeTable& t);

// Partitioned cacti tallied by block counts p; nonzero entries only.
CountTable count_partitioned_by_p(int n, int r, const Budget& budget = {});

}  // namespace cactus
