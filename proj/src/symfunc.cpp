#include "cactus/symfunc.hpp"

#include <algorithm>
#include <sstream>

#include "cactus/formula.hpp"
#include "cactus/stirling.hpp"

namespace cactus {

static void check_window(const std::vector<int>& lambda, int total_vars, int offset, int v) {
  if (v < 1 || offset < 0 || offset + v > total_vars)
    throw std::invalid_argument("symfunc: variable window out of range");
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 1) throw std::invalid_argument("symfunc: parts must be positive");
    if (i + 1 < lambda.size() && lambda[i] < lambda[i + 1])
      throw std::invalid_argument("symfunc: parts must be descending");
  }
}

RatPoly monomial_sym(const std::vector<int>& lambda, int total_vars, int offset, int v) {
  check_window(lambda, total_vars, offset, v);
  RatPoly out(total_vars);
  if (static_cast<int>(lambda.size()) > v) return out;  // m_lambda = 0
  std::vector<int> exps(v, 0);
  std::copy(lambda.begin(), lambda.end(), exps.begin());
  std::sort(exps.begin(), exps.end());
  std::vector<int> full(total_vars, 0);
  do {
    std::fill(full.begin(), full.end(), 0);
    std::copy(exps.begin(), exps.end(), full.begin() + offset);
    out.add_term(full, Rat(1));
  } while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

RatPoly powersum_sym(const std::vector<int>& lambda, int total_vars, int offset, int v) {
  check_window(lambda, total_vars, offset, v);
  RatPoly out = RatPoly::constant(total_vars, Rat(1));
  for (int part : lambda) {
    RatPoly pk(total_vars);
    std::vector<int> e(total_vars, 0);
    for (int j = 0; j < v; ++j) {
      e[offset + j] = part;
      pk.add_term(e, Rat(1));
      e[offset + j] = 0;
    }
    out = out * pk;
  }
  return out;
}

Theorem2Report theorem2_check(int n, int r, int v, Orientation o, const Budget& budget) {
  if (n < 1 || r < 2 || v < 1) throw std::invalid_argument("theorem2_check: need n >= 1, r >= 2, v >= 1");
  const auto parts_list = partitions_of(n);
  budget.charge(pow_int(Int(parts_list.size()), r) + pow_int(factorial(n), r - 1),
                "theorem2 expansion");
  const int total = r * v;
  const Rat prefactor = Rat(1, pow_int(factorial(n - 1), r - 1));

  // count side
  RatPoly count_side(total);
  for (auto& [types, k] : count_by_cycle_types(n, r, budget)) {
    RatPoly term = RatPoly::constant(total, Rat(k) * prefactor);
    for (int i = 0; i < r; ++i)
      term = term * (o == Orientation::verified ? powersum_sym(types[i], total, i * v, v)
                                                : monomial_sym(types[i], total, i * v, v));
    count_side = count_side + term;
  }

  // coefficient side: tuples of partitions, weighted by the determinant series
  RatPoly coeff_side(total);
  std::vector<size_t> idx(r, 0);
  while (true) {
    std::vector<int> ell(r);
    for (int i = 0; i < r; ++i) ell[i] = static_cast<int>(parts_list[idx[i]].size());
    Int c = series_coefficient(n, r, ell);
    if (c != 0) {
      Rat w(c);
      for (int i = 0; i < r; ++i) w /= Rat(binomial(n - 1, ell[i] - 1));
      RatPoly term = RatPoly::constant(total, w);
      for (int i = 0; i < r; ++i)
        term = term * (o == Orientation::verified ? monomial_sym(parts_list[idx[i]], total, i * v, v)
                                                  : powersum_sym(parts_list[idx[i]], total, i * v, v));
      coeff_side = coeff_side + term;
    }
    int i = r - 1;
    while (i >= 0 && ++idx[i] == parts_list.size()) idx[i--] = 0;
    if (i < 0) break;
  }

  Theorem2Report rep;
  RatPoly diff = count_side - coeff_side;
  if (diff.is_zero()) return rep;
  rep.ok = false;
  rep.witness = diff.terms().begin()->first;
  rep.lhs = count_side.coefficient(rep.witness);
  rep.rhs = coeff_side.coefficient(rep.witness);
  std::ostringstream os;
  os << "sides differ at monomial (";
  for (size_t i = 0; i < rep.witness.size(); ++i) os << (i ? "," : "") << rep.witness[i];
  os << "): count side " << rep.lhs << ", coefficient side " << rep.rhs;
  rep.detail = os.str();
  return rep;
}

}  // namespace cactus
