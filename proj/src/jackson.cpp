#include "cactus/jackson.hpp"

#include <sstream>

#include "cactus/avector.hpp"

namespace cactus {

IntPoly jackson_polynomial(int n, int r, const Budget& budget) {
  if (n < 1 || r < 1) throw std::invalid_argument("jackson_polynomial: n, r must be >= 1");
  budget.charge(pow_int(Int(n) + 1, r), "jackson polynomial expansion");
  IntPoly ones = IntPoly::constant(r, 1);
  IntPoly all_vars = IntPoly::constant(r, 1);
  for (int i = 0; i < r; ++i) {
    ones = ones * (IntPoly::constant(r, 1) + IntPoly::variable(r, i));
    all_vars = all_vars * IntPoly::variable(r, i);
  }
  return all_vars * (ones - all_vars).pow(n - 1);
}

Int jackson_coefficient(int n, int r, const std::vector<int>& p, const Budget& budget) {
  if (static_cast<int>(p.size()) != r) throw std::invalid_argument("jackson_coefficient: p size != r");
  return jackson_polynomial(n, r, budget).coefficient(p);
}

Int jackson_coefficient_multinomial(int n, int r, const std::vector<int>& p) {
  if (static_cast<int>(p.size()) != r)
    throw std::invalid_argument("jackson_coefficient_multinomial: p size != r");
  std::vector<int> target(r);
  for (int i = 0; i < r; ++i) target[i] = p[i] - 1;
  Int c = 0;
  for (const AVector& a : enumerate_avectors_with_targets(r, n - 1, target)) {
    std::vector<int> parts;
    for (auto& [mask, cnt] : a.counts) parts.push_back(cnt);
    c += multinomial(n - 1, parts);
  }
  return c;
}

CountTable jackson_table(int n, int r, JacksonForm form, const Budget& budget) {
  CountTable t;
  if (form == JacksonForm::product) {
    const IntPoly jp = jackson_polynomial(n, r, budget);
    for (const auto& [e, c] : jp.terms()) t[e] = c;
    return t;
  }
  // p-loop count times a bound on the a-vector enumeration per coefficient
  budget.charge(pow_int(Int(n) + 1, r) * binomial(n - 1 + (1 << r) - 2, (1 << r) - 2),
                "jackson multinomial sweep");
  std::vector<int> p(r, 1);
  while (true) {
    Int c = jackson_coefficient_multinomial(n, r, p);
    if (c != 0) t[p] = c;
    int i = r - 1;
    while (i >= 0 && p[i] == n) p[i--] = 1;
    if (i < 0) break;
    ++p[i];
  }
  return t;
}

EquivalenceReport jackson_forms_agree(int n, int r, const Budget& budget) {
  CountTable a = jackson_table(n, r, JacksonForm::product, budget);
  CountTable b = jackson_table(n, r, JacksonForm::multinomial, budget);
  EquivalenceReport rep;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ia != a.end() && ib != b.end() && ia->first == ib->first && ia->second == ib->second) {
      ++ia;
      ++ib;
      continue;
    }
    rep.ok = false;
    std::ostringstream os;
    os << "jackson forms disagree at n=" << n << " r=" << r << ": ";
    if (ia != a.end() && (ib == b.end() || ia->first <= ib->first)) {
      os << "product has p=(";
      for (size_t i = 0; i < ia->first.size(); ++i) os << (i ? "," : "") << ia->first[i];
      os << ") -> " << ia->second;
    }
    if (ib != b.end() && (ia == a.end() || ib->first <= ia->first)) {
      os << " multinomial has p=(";
      for (size_t i = 0; i < ib->first.size(); ++i) os << (i ? "," : "") << ib->first[i];
      os << ") -> " << ib->second;
    }
    rep.detail = os.str();
    return rep;
  }
  return rep;
}

EquivalenceReport jackson_r2_identity(int n) {
  if (n < 1) throw std::invalid_argument("jackson_r2_identity: n must be >= 1");
  EquivalenceReport rep;
  for (int p1 = 1; p1 <= n; ++p1)
    for (int p2 = 1; p1 + p2 <= n + 1; ++p2) {
      Int lhs = factorial(n - 1) * p2 * multinomial(n, {p1 - 1, p2, n + 1 - p1 - p2});
      Int rhs = factorial(n) * multinomial(n - 1, {p1 - 1, p2 - 1, n + 1 - p1 - p2});
      if (lhs != rhs) {
        rep.ok = false;
        std::ostringstream os;
        os << "r=2 identity fails at n=" << n << " p=(" << p1 << "," << p2 << "): " << lhs
           << " != " << rhs;
        rep.detail = os.str();
        return rep;
      }
    }
  return rep;
}

}  // namespace cactus
