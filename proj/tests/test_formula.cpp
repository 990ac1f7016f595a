#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "cactus/formula.hpp"
#include "cactus/oracle.hpp"
#include "cactus/subsets.hpp"

using namespace cactus;

namespace {

// cofactor expansion, the slow reference for the Bareiss routine
Int det_naive(const Matrix& m) {
  size_t c = m.size();
  if (c == 0) return 1;
  if (c == 1) return m[0][0];
  Int acc = 0;
  for (size_t j = 0; j < c; ++j) {
    if (m[0][j] == 0) continue;
    Matrix minor(c - 1, std::vector<Int>(c - 1));
    for (size_t i = 1; i < c; ++i)
      for (size_t k = 0, w = 0; k < c; ++k)
        if (k != j) minor[i - 1][w++] = m[i][k];
    Int term = m[0][j] * det_naive(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

unsigned mask_of(std::initializer_list<int> colors) {
  unsigned m = 0;
  for (int l : colors) m |= 1u << (l - 1);
  return m;
}

}  // namespace

TEST_CASE("cyclic gap") {
  CHECK(cyclic_gap(mask_of({1, 3}), 3, 1) == 2);
  CHECK(cyclic_gap(mask_of({1, 3}), 3, 3) == 1);
  CHECK(cyclic_gap(mask_of({1}), 3, 1) == 3);
  CHECK(cyclic_gap(mask_of({1, 2, 3}), 3, 3) == 1);
  CHECK(cyclic_gap(mask_of({1, 4}), 4, 4) == 1);
  CHECK(cyclic_gap(mask_of({1, 4}), 4, 1) == 3);
  CHECK_THROWS(cyclic_gap(mask_of({1, 3}), 3, 2));
}

TEST_CASE("subset labels") {
  unsigned m = mask_of({1, 3, 4});
  CHECK(subset_label(m, 5) == "1,3,4");
  CHECK(subset_from_label("1,3,4", 5) == m);
  CHECK_THROWS(subset_from_label("0,1", 3));
  CHECK_THROWS(subset_from_label("1,4", 3));
  CHECK_THROWS(subset_from_label("", 3));
}

TEST_CASE("derived p-vector") {
  AVector a{3, {{mask_of({1, 2}), 1}, {mask_of({1, 3}), 1}}};
  CHECK(a.total() == 2);
  CHECK(a.derived_p() == std::vector<int>{1, 1, 1});
  AVector b{2, {{mask_of({1}), 2}}};
  CHECK(b.derived_p() == std::vector<int>{1, 2});
}

TEST_CASE("a-vector enumeration matches hand counts") {
  // n=2, r=3, p=(1,1,1): exactly the two solutions
  std::vector<AVector> sols = enumerate_avectors(2, 3, {1, 1, 1});
  std::set<AVector> got(sols.begin(), sols.end());
  std::set<AVector> expect = {
      AVector{3, {{mask_of({1}), 1}, {mask_of({1, 2, 3}), 1}}},
      AVector{3, {{mask_of({1, 2}), 1}, {mask_of({1, 3}), 1}}},
  };
  CHECK(got == expect);
  CHECK(got.size() == sols.size());

  // infeasible p
  CHECK(enumerate_avectors(2, 2, {2, 2}).empty());
  CHECK(enumerate_avectors(3, 2, {5, 1}).empty());
}

TEST_CASE("r=2 a-vectors are forced") {
  // at r=2 the constraints pin a_{1}=p_2, a_{2}=p_1-1, a_{12}=n+1-p_1-p_2
  for (int n = 1; n <= 5; ++n) {
    for (int p1 = 1; p1 <= n; ++p1) {
      for (int p2 = 1; p2 <= n; ++p2) {
        std::vector<AVector> sols = enumerate_avectors(n, 2, {p1, p2});
        int a12 = n + 1 - p1 - p2;
        if (a12 < 0) {
          CHECK(sols.empty());
          continue;
        }
        REQUIRE(sols.size() == 1);
        CHECK(sols[0].at(mask_of({1})) == p2);
        CHECK(sols[0].at(mask_of({2})) == p1 - 1);
        CHECK(sols[0].at(mask_of({1, 2})) == a12);
      }
    }
  }
}

TEST_CASE("unconstrained enumeration has multiset-coefficient size") {
  // 3 subsets at r=2, total 3: C(3+2,2) = 10
  CHECK(enumerate_avectors_by_total(2, 3).size() == 10);
  CHECK(enumerate_avectors_by_total(3, 2).size() == 28);  // C(2+6,6)
}

TEST_CASE("delta matrix reproduces the small closed forms") {
  // r=2: [[p1, -p2], [1-p1, p2]]
  AVector a{2, {{mask_of({1}), 2}, {mask_of({2}), 1}, {mask_of({1, 2}), 1}}};
  std::vector<int> p = a.derived_p();  // p1 = 1+a2 = 2, p2 = a1 = 2
  REQUIRE(p == std::vector<int>{2, 2});
  Matrix m = delta_matrix(a);
  Matrix expect = {{2, -2}, {-1, 2}};
  CHECK(m == expect);
  CHECK(delta_det(a) == 2);  // = p2 after column reduction

  // r=3 closed form p2*p3 - a3*(p3 - a1)
  AVector a3{3, {{mask_of({1}), 1}, {mask_of({3}), 1}, {mask_of({1, 2, 3}), 1}}};
  std::vector<int> q = a3.derived_p();
  Int closed = Int(q[1]) * q[2] -
               Int(a3.at(mask_of({3}))) * (q[2] - a3.at(mask_of({1})));
  CHECK(delta_det(a3) == closed);
}

TEST_CASE("delta matrix r=4 worked instance is upper triangular") {
  AVector a{4, {{mask_of({1, 2}), 1}, {mask_of({1, 3, 4}), 1}}};
  Matrix expect = {
      {1, -1, 0, 0},
      {0, 1, -1, -1},
      {0, 0, 1, 0},
      {0, 0, 0, 1},
  };
  CHECK(delta_matrix(a) == expect);
  CHECK(delta_det(a) == 1);
}

TEST_CASE("column sums: first column 1, the rest 0") {
  for (const AVector& a : enumerate_avectors_by_total(4, 3)) {
    Matrix m = delta_matrix(a);
    for (int j = 0; j < 4; ++j) {
      Int s = 0;
      for (int i = 0; i < 4; ++i) s += m[i][j];
      CHECK(s == (j == 0 ? 1 : 0));
    }
  }
}

TEST_CASE("bareiss agrees with cofactor expansion") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int size = 0; size <= 5; ++size) {
    for (int rep = 0; rep < 8; ++rep) {
      Matrix m(size, std::vector<Int>(size));
      for (auto& row : m)
        for (Int& x : row) x = d(rng);
      CHECK(determinant(m) == det_naive(m));
    }
  }
  // zero pivot needing a row swap
  Matrix swap_case = {{0, 1, 2}, {3, 0, 1}, {1, 1, 1}};
  CHECK(determinant(swap_case) == det_naive(swap_case));
  Matrix singular = {{1, 2}, {2, 4}};
  CHECK(determinant(singular) == 0);
}

TEST_CASE("series coefficients match hand-computed values") {
  CHECK(series_coefficient(2, 3, {1, 1, 1}) == 4);
  CHECK(series_coefficient(3, 2, {2, 2}) == 6);
  CHECK(series_coefficient(2, 4, {1, 1, 1, 1}) == 8);
  CHECK(series_coefficient(3, 2, {1, 1}) == 3);
  CHECK(series_coefficient(3, 2, {1, 2}) == 6);
  CHECK(series_coefficient(3, 2, {1, 3}) == 3);
  CHECK(series_coefficient(3, 2, {3, 1}) == 3);
  CHECK(series_coefficient(3, 2, {4, 1}) == 0);
}

TEST_CASE("tree counts on worked instances") {
  CHECK(tree_count(AVector{2, {{mask_of({1}), 1}}}) == 1);
  CHECK(tree_count(AVector{2, {{mask_of({1}), 2}}}) == 1);
  CHECK(tree_count(AVector{3, {{mask_of({1, 2}), 1}, {mask_of({1, 3}), 1}}}) == 2);
}

TEST_CASE("k table: n=3, r=2 equals the oracle") {
  CountTable k = k_by_cycle_counts(3, 2);
  CountTable expect = {{{1, 1}, 1}, {{1, 3}, 1}, {{3, 1}, 1}, {{2, 2}, 3}};
  CHECK(k == expect);
  CHECK(k == count_by_cycle_counts(3, 2));
}

TEST_CASE("k table drops impossible cycle counts") {
  CountTable k = k_by_cycle_counts(2, 4);
  CHECK(k.find({1, 1, 1, 1}) == k.end());  // (12)^4 = id, not the long cycle
  for (const auto& [q, v] : k) CHECK(v > 0);
  CHECK(k == count_by_cycle_counts(2, 4));
}

TEST_CASE("r=1 table is the long cycle itself") {
  CountTable k = k_by_cycle_counts(4, 1);
  CountTable expect = {{{1}, 1}};
  CHECK(k == expect);
}

TEST_CASE("partitioned counts: closed form, oracle, stirling transform") {
  CHECK(partitioned_count_closed_form(2, 2, {1, 1}) == 2);
  CHECK(partitioned_count_closed_form(2, 2, {2, 1}) == 1);
  CHECK(partitioned_count_closed_form(3, 2, {2, 2}) == 3);
  CHECK(partitioned_count_closed_form(2, 4, {1, 1, 1, 1}) == 8);

  CountTable k32 = k_by_cycle_counts(3, 2);
  CHECK(partitioned_count_from_k(k32, {2, 2}) == 3);
  CHECK(partitioned_count_from_k(k32, {3, 3}) == 0);

  CHECK(partitioned_counts_closed_form(3, 2) == count_partitioned_by_p(3, 2));
}

TEST_CASE("exact division guards") {
  CHECK(exact_div(Int(12), Int(4)) == 3);
  CHECK_THROWS(exact_div(Int(5), Int(2)));
  CHECK(multinomial(4, {2, 2}) == 6);
  CHECK_THROWS(multinomial(4, {2, 1}));  // parts must sum to n
}
