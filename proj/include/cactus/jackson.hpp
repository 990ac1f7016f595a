#pragma once

#include <string>
#include <vector>

#include "cactus/ints.hpp"
#include "cactus/oracle.hpp"
#include "cactus/polynomial.hpp"

namespace cactus {

using IntPoly = SparsePolynomial<Int>;

// prod x_i * (prod (1+x_i) - prod x_i)^(n-1), the genus-zero cactus series.
IntPoly jackson_polynomial(int n, int r, const Budget& budget = {});

// Coefficient of prod x_i^{p_i}, extracted from the product form.
Int jackson_coefficient(int n, int r, const std::vector<int>& p, const Budget& budget = {});

// Same coefficient as a multinomial sum: over a >= 0 indexed by nonempty
// subsets t of {1..r} with sum a = n-1 and, for every color l,
// sum over t not containing l of a_t = p_l - 1.
Int jackson_coefficient_multinomial(int n, int r, const std::vector<int>& p);

enum class JacksonForm { product, multinomial };

// Nonzero coefficients keyed by p.
CountTable jackson_table(int n, int r, JacksonForm form, const Budget& budget = {});

struct EquivalenceReport {
  bool ok = true;
  std::string detail;  // first mismatch, when !ok
};

// Termwise comparison of the two forms over all p.
EquivalenceReport jackson_forms_agree(int n, int r, const Budget& budget = {});

// r = 2 closed-form identity:
//   (n-1)! * p_2 * binom(n; p_1-1, p_2, n+1-p_1-p_2)
//     = n! * binom(n-1; p_1-1, p_2-1, n+1-p_1-p_2)
// over all feasible p. This is the r = 2 bridge to the determinant series.
EquivalenceReport jackson_r2_identity(int n);

}  // namespace cactus
