#pragma once

#include <string>
#include <vector>

#include "cactus/ints.hpp"
#include "cactus/oracle.hpp"
#include "cactus/polynomial.hpp"

namespace cactus {

using RatPoly = SparsePolynomial<Rat>;

// Monomial symmetric polynomial m_lambda over the v variables
// x_{offset+1}..x_{offset+v} of a pool of total_vars variables.
// Zero when lambda has more parts than v.
RatPoly monomial_sym(const std::vector<int>& lambda, int total_vars, int offset, int v);

// Power-sum symmetric polynomial p_lambda over the same variable window.
RatPoly powersum_sym(const std::vector<int>& lambda, int total_vars, int offset, int v);

// The identity relates counts by cycle type to determinant-series
// coefficients, pairing the count side with power sums and the coefficient
// side with monomial symmetric polynomials. `printed` swaps the two bases,
// which is the reading a literal transcription would give; it is kept
// because it demonstrably fails and the failure is part of the test suite.
enum class Orientation { verified, printed };

struct Theorem2Report {
  bool ok = true;
  std::vector<int> witness;  // exponent vector of the first mismatching monomial
  Rat lhs = 0, rhs = 0;      // its coefficients on the two sides
  std::string detail;
};

// Expands both sides over r disjoint alphabets of v variables each and
// compares termwise.
Theorem2Report theorem2_check(int n, int r, int v, Orientation o = Orientation::verified,
                              const Budget& budget = {});

}  // namespace cactus
