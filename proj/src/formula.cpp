#include "cactus/formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "cactus/stirling.hpp"

namespace cactus {

Matrix delta_matrix(const AVector& a) {
  const int r = a.r;
  if (r < 2) throw std::invalid_argument("delta_matrix: r must be >= 2");
  const std::vector<int> p = a.derived_p();
  Matrix m(r, std::vector<Int>(r, 0));
  for (int i = 1; i <= r; ++i) {
    m[i - 1][i - 1] = p[i - 1];
    for (int j = 1; j <= r; ++j) {
      if (j == i || j == i % r + 1) continue;
      const int threshold = ((j - i) % r + r) % r + 1;
      Int s = 0;
      for (auto& [mask, cnt] : a.counts)
        if (subset_contains(mask, i) && cyclic_gap(mask, r, i) >= threshold) s += cnt;
      m[i - 1][j - 1] = -s;
    }
  }
  for (int c = 2; c <= r; ++c) {
    Int s = 0;
    for (int w = 1; w <= r; ++w)
      if (w != c - 1) s += m[w - 1][c - 1];
    m[c - 2][c - 1] = -s;
  }
  Int s = 0;
  for (int w = 1; w < r; ++w) s += m[w - 1][0];
  m[r - 1][0] = 1 - s;
  return m;
}

Int determinant(Matrix m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  for (auto& row : m)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("determinant: not square");
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) { pivot = i; break; }
      if (pivot < 0) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;  // exact by Bareiss
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Int delta_det(const AVector& a) { return determinant(delta_matrix(a)); }

Int avector_multinomial(int n, const AVector& a) {
  std::vector<int> parts;
  for (auto& [mask, cnt] : a.counts) parts.push_back(cnt);
  return multinomial(n, parts);
}

Int series_coefficient(int n, int r, const std::vector<int>& p) {
  Int c = 0;
  for (const AVector& a : enumerate_avectors(n, r, p))
    c += delta_det(a) * avector_multinomial(n, a);
  return c;
}

Int tree_count(const AVector& a) {
  const int n = a.total();
  if (n < 1) throw std::invalid_argument("tree_count: empty a-vector");
  Int num = pow_int(factorial(n - 1), a.r - 1) * delta_det(a) * avector_multinomial(n, a);
  Int den = 1;
  for (int pi : a.derived_p()) {
    if (pi < 0) return 0;
    den *= factorial(pi);
  }
  return exact_div(num, den);
}

// Iterate p over {1..n}^r in lexicographic order.
static bool next_pvector(std::vector<int>& p, int n) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (p[i] < n) {
      ++p[i];
      std::fill(p.begin() + i + 1, p.end(), 1);
      return true;
    }
  }
  return false;
}

CountTable k_by_cycle_counts(int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("k_by_cycle_counts: n, r must be >= 1");
  if (r == 1) {
    // single factor: alpha_1 = gamma_n, one cycle
    CountTable t;
    t[std::vector<int>(1, 1)] = 1;
    return t;
  }
  CountTable cp;  // p -> C(p)
  std::vector<int> p(r, 1);
  do {
    Int c = series_coefficient(n, r, p);
    if (c != 0) cp[p] = c;
  } while (next_pvector(p, n));

  const Int pref = pow_int(factorial(n - 1), r - 1);
  CountTable k;
  std::vector<int> q(r, 1);
  do {
    Rat acc = 0;
    for (auto& [pv, c] : cp) {
      Rat term(c);
      bool zero = false;
      for (int i = 0; i < r; ++i) {
        Int s = stirling1_signed(pv[i], q[i]);
        if (s == 0) { zero = true; break; }
        term *= Rat(s, factorial(pv[i]));
      }
      if (!zero) acc += term;
    }
    acc *= Rat(pref);
    if (denominator(acc) != 1) throw std::runtime_error("k_by_cycle_counts: non-integral result");
    Int v = numerator(acc);
    if (v != 0) k[q] = v;
  } while (next_pvector(q, n));
  return k;
}

Int partitioned_count_closed_form(int n, int r, const std::vector<int>& p) {
  Int num = pow_int(factorial(n - 1), r - 1) * series_coefficient(n, r, p);
  Int den = 1;
  for (int pi : p) den *= factorial(pi);
  return exact_div(num, den);
}

CountTable partitioned_counts_closed_form(int n, int r) {
  if (n < 1 || r < 2) throw std::invalid_argument("partitioned_counts_closed_form: need n >= 1, r >= 2");
  CountTable t;
  std::vector<int> p(r, 1);
  do {
    Int v = partitioned_count_closed_form(n, r, p);
    if (v != 0) t[p] = v;
  } while (next_pvector(p, n));
  return t;
}

Int partitioned_count_from_k(const CountTable& k, const std::vector<int>& p) {
  Int acc = 0;
  for (auto& [q, kq] : k) {
    if (q.size() != p.size()) throw std::invalid_argument("partitioned_count_from_k: arity mismatch");
    Int term = kq;
    for (size_t i = 0; i < p.size(); ++i) {
      term *= stirling2(q[i], p[i]);
      if (term == 0) break;
    }
    acc += term;
  }
  return acc;
}

}  // namespace cactus
