#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cactus/cactus_tree.hpp"
#include "cactus/oracle.hpp"

namespace cactus {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  long long ms = 0;
};

// (r, n_max) pairs; each check sweeps n = 1..n_max for every listed r.
using Grid = std::vector<std::pair<int, int>>;

Grid default_formula_grid();    // {2,6} {3,5} {4,4} {5,3}
Grid default_bijection_grid();  // {2,4} {3,4} {4,3}

// Worked-example fixtures shared by checks and unit tests.
PartitionedCactus six_symbol_example();    // n=6, r=5
PartitionedCactus three_symbol_example();  // n=3, r=4
CactusTree three_symbol_tree();            // the tree the n=3 example maps to

// Determinant closed forms for r = 2, 3 over every a with total n <= n_max,
// plus column-sum structure and the first-minor reduction.
CheckResult check_delta_closed_forms(int n_max = 8, int r_max = 3);

// Counting route agreement: the determinant series (via the Stirling
// transform) against brute-force enumeration, per cycle-count vector.
CheckResult check_formula_vs_oracle(const Grid& grid, const Budget& budget = {});

// Jackson series: product form vs multinomial form, coefficient bridge
// C(p) = n^(r-1) J(p), and the r = 2 closed identity up to r2_n_max.
CheckResult check_jackson(const Grid& grid, int r2_n_max = 10, const Budget& budget = {});

// Exhaustive roundtrip pc -> tree -> pc; forward images validate; image
// counts per content a match tree_count(a); images are pairwise distinct.
CheckResult check_bijection_roundtrip(const Grid& grid, const Budget& budget = {});

// enumerate_cactus_trees(a) matches tree_count(a) and the exact set of
// forward images, for all a with total n <= n_max, r = 2..r_max.
CheckResult check_tree_enumeration(int n_max = 3, int r_max = 3, const Budget& budget = {});

// The worked examples: both factorization chains multiply to the long
// cycle; the six-symbol partitioned cactus maps to the tree with six
// distinct singleton contents; the stored three-symbol tree inverts to its
// listed partitioned cactus (and maps back).
CheckResult check_worked_examples();

// Partitioned-cactus counts three ways: closed form, oracle sweep, and the
// Stirling-2 aggregation of the k-table.
CheckResult check_partitioned_counts(const Grid& grid, const Budget& budget = {});

// The symmetric-function identity over r alphabets (v = n variables each):
// verified orientation passes on the grid entries (r, n <= n_max); the
// printed orientation must fail at n = 2, r = 2 with a witness monomial.
CheckResult check_theorem2(const Grid& grid, const Budget& budget = {});

enum class Suite { delta, formula, jackson, bijection, theorem2, all };
std::optional<Suite> suite_from_name(const std::string& name);

std::vector<CheckResult> run_suite(Suite s, std::optional<int> n_max, std::optional<int> r_max,
                                   const Budget& budget = {});

}  // namespace cactus
