#include "cactus/oracle.hpp"

#include <sstream>

#include "cactus/stirling.hpp"

namespace cactus {

bool Factorization::product_is_long_cycle() const {
  if (n < 1 || alphas.empty()) return false;
  Permutation prod = Permutation::identity(n);
  for (auto it = alphas.rbegin(); it != alphas.rend(); ++it)
    prod = compose(*it, prod);
  return prod == Permutation::long_cycle(n);
}

void Budget::charge(const Int& steps, const char* what) const {
  if (steps > limit) {
    std::ostringstream os;
    os << "budget exceeded: " << what << " needs " << steps << " steps, limit " << limit
       << " (raise BUDGET or --budget to override)";
    throw BudgetError(os.str());
  }
}

static void check_args(int n, int r) {
  if (n < 1) throw std::invalid_argument("oracle: n must be >= 1");
  if (r < 2) throw std::invalid_argument("oracle: r must be >= 2");
}

void for_each_factorization(int n, int r, const Budget& budget,
                            const std::function<void(const Factorization&)>& visit) {
  check_args(n, r);
  budget.charge(pow_int(factorial(n), r - 1), "factorization sweep");
  const Permutation gamma = Permutation::long_cycle(n);
  Factorization f;
  f.n = n;
  f.alphas.assign(r, Permutation::identity(n));

  // Odometer over the first r-1 coordinates; the last is forced to
  // alpha_{r-1}^-1 ... alpha_1^-1 gamma.
  std::vector<Permutation> free(r - 1, Permutation::identity(n));
  while (true) {
    Permutation rest = gamma;
    for (int i = 0; i < r - 1; ++i) rest = compose(free[i].inverse(), rest);
    for (int i = 0; i < r - 1; ++i) f.alphas[i] = free[i];
    f.alphas[r - 1] = rest;
    visit(f);

    int i = r - 2;
    while (i >= 0 && !free[i].next_lex()) --i;
    if (i < 0) break;
    // next_lex resets coordinates past i back to identity (sorted ascending)
  }
}

std::vector<Factorization> enumerate_factorizations(int n, int r, const Budget& budget) {
  std::vector<Factorization> out;
  for_each_factorization(n, r, budget, [&](const Factorization& f) { out.push_back(f); });
  return out;
}

Int partitioned_cactus_total(int n, int r, const Budget& budget) {
  Int total = 0;
  for_each_factorization(n, r, budget, [&](const Factorization& f) {
    Int ways = 1;
    for (const Permutation& a : f.alphas) ways *= bell(a.num_cycles());
    total += ways;
  });
  return total;
}

void for_each_partitioned_cactus(int n, int r, const Budget& budget,
                                 const std::function<void(const PartitionedCactus&)>& visit) {
  budget.charge(partitioned_cactus_total(n, r, budget), "partitioned cactus sweep");
  for_each_factorization(n, r, budget, [&](const Factorization& f) {
    std::vector<std::vector<SetPartition>> choices;
    for (const Permutation& a : f.alphas) choices.push_back(stable_partitions(a));
    PartitionedCactus pc;
    pc.cactus = f;
    pc.partitions.assign(r, SetPartition::singletons(n));
    std::vector<size_t> idx(r, 0);
    while (true) {
      for (int i = 0; i < r; ++i) pc.partitions[i] = choices[i][idx[i]];
      visit(pc);
      int i = r - 1;
      while (i >= 0 && ++idx[i] == choices[i].size()) idx[i--] = 0;
      if (i < 0) break;
    }
  });
}

std::vector<PartitionedCactus> enumerate_partitioned_cacti(int n, int r, const Budget& budget) {
  std::vector<PartitionedCactus> out;
  for_each_partitioned_cactus(n, r, budget, [&](const PartitionedCactus& pc) { out.push_back(pc); });
  return out;
}

CountTable count_by_cycle_counts(int n, int r, const Budget& budget) {
  CountTable t;
  std::vector<int> key(r);
  for_each_factorization(n, r, budget, [&](const Factorization& f) {
    for (int i = 0; i < r; ++i) key[i] = f.alphas[i].num_cycles();
    t[key] += 1;
  });
  return t;
}

TypeTable count_by_cycle_types(int n, int r, const Budget& budget) {
  TypeTable t;
  std::vector<std::vector<int>> key(r);
  for_each_factorization(n, r, budget, [&](const Factorization& f) {
    for (int i = 0; i < r; ++i) key[i] = f.alphas[i].cycle_type();
    t[key] += 1;
  });
  return t;
}

CountTable aggregate_types_to_counts(const TypeTable& t) {
  CountTable out;
  for (auto& [types, v] : t) {
    std::vector<int> key;
    for (auto& ct : types) key.push_back(static_cast<int>(ct.size()));
    out[key] += v;
  }
  return out;
}

CountTable count_partitioned_by_p(int n, int r, const Budget& budget) {
  CountTable t;
  std::vector<int> key(r);
  for_each_partitioned_cactus(n, r, budget, [&](const PartitionedCactus& pc) {
    for (int i = 0; i < r; ++i) key[i] = pc.partitions[i].num_blocks();
    t[key] += 1;
  });
  return t;
}

}  // namespace cactus
