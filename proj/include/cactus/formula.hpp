#pragma once

#include <vector>

#include "cactus/avector.hpp"
#include "cactus/ints.hpp"

namespace cactus {

using Matrix = std::vector<std::vector<Int>>;

// The r x r matrix whose determinant weights a in the counting series.
// With p the derived p-vector of a and gap(t,i) the cyclic gap:
//   M[i][i] = p_i
//   M[i][j] = -sum of a_t over t containing i with gap(t,i) >= ((j-i) mod r)+1,
//             for j outside {i, i+1 cyclically}
//   M[i-1][i] balances column i to sum 0 (i >= 2); M[r][1] balances column 1
//   to sum 1.
Matrix delta_matrix(const AVector& a);

// Fraction-free (Bareiss) determinant, exact over Int.
Int determinant(Matrix m);

Int delta_det(const AVector& a);

// Multinomial binom(n; a) over the stored a_t values.
Int avector_multinomial(int n, const AVector& a);

// C(p) = sum over valid a of delta_det(a) * binom(n; a).
Int series_coefficient(int n, int r, const std::vector<int>& p);

// Number of cactus trees with content a:
//   (n-1)!^(r-1) * delta_det(a) * binom(n; a) / prod p_i!   (p derived from a)
Int tree_count(const AVector& a);

// k^n_{q_1..q_r}: factorizations of the long cycle into r permutations where
// alpha_i has exactly q_i cycles. Table contains nonzero entries only.
CountTable k_by_cycle_counts(int n, int r);

// Number of partitioned cacti with block counts p:
//   (n-1)!^(r-1) * C(p) / prod p_i!
Int partitioned_count_closed_form(int n, int r, const std::vector<int>& p);
CountTable partitioned_counts_closed_form(int n, int r);

// Same quantity through the Stirling transform of a k-table:
//   sum_q k_q * prod S(q_i, p_i).
Int partitioned_count_from_k(const CountTable& k, const std::vector<int>& p);

}  // namespace cactus
