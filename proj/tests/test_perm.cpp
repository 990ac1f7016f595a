#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cactus/perm.hpp"
#include "cactus/setpart.hpp"
#include "cactus/stirling.hpp"

using namespace cactus;

TEST_CASE("composition applies the right factor first") {
  Permutation s = Permutation::from_cycles(3, {{1, 2}});
  Permutation t = Permutation::from_cycles(3, {{2, 3}});
  Permutation st = compose(s, t);  // x -> s(t(x))
  CHECK(st(1) == 2);
  CHECK(st(2) == 3);
  CHECK(st(3) == 1);
  CHECK(st == Permutation::long_cycle(3));
}

TEST_CASE("factor chains multiply to the long cycle") {
  // n = 6 chain
  std::vector<Permutation> a6 = {
      Permutation::from_cycles(6, {{1, 2}}),
      Permutation::from_cycles(6, {{2, 4}, {5, 6}}),
      Permutation::identity(6),
      Permutation::from_cycles(6, {{2, 3}, {4, 6}}),
      Permutation::identity(6),
  };
  Permutation prod = Permutation::identity(6);
  for (const Permutation& a : a6) prod = compose(prod, a);
  CHECK(prod == Permutation::long_cycle(6));

  std::vector<Permutation> a3 = {
      Permutation::from_cycles(3, {{1, 2}}),
      Permutation::from_cycles(3, {{1, 3}}),
      Permutation::from_cycles(3, {{1, 2}}),
      Permutation::from_cycles(3, {{1, 3}}),
  };
  Permutation p3 = Permutation::identity(3);
  for (const Permutation& a : a3) p3 = compose(p3, a);
  CHECK(p3 == Permutation::long_cycle(3));
}

TEST_CASE("cycles are canonical: min first, sorted by minima") {
  Permutation p = Permutation::from_cycles(6, {{2, 4}, {5, 6}});
  std::vector<std::vector<int>> expect = {{1}, {2, 4}, {3}, {5, 6}};
  CHECK(p.cycles() == expect);
  CHECK(p.num_cycles() == 4);
  CHECK(p.cycle_type() == std::vector<int>{2, 2, 1, 1});

  CHECK(Permutation::long_cycle(6).cycles() ==
        std::vector<std::vector<int>>{{1, 2, 3, 4, 5, 6}});
  CHECK(Permutation::identity(1).cycles() ==
        std::vector<std::vector<int>>{{1}});
}

TEST_CASE("from_cycles rejects repeated and out-of-range points") {
  CHECK_THROWS(Permutation::from_cycles(4, {{1, 2}, {2, 3}}));
  CHECK_THROWS(Permutation::from_cycles(4, {{0, 1}}));
  CHECK_THROWS(Permutation::from_cycles(4, {{4, 5}}));
}

TEST_CASE("constructor rejects non-bijections") {
  CHECK_THROWS(Permutation(std::vector<int>{1, 1, 3}));
  CHECK_THROWS(Permutation(std::vector<int>{0, 1, 2}));
}

TEST_CASE("inverse and composition properties on random permutations") {
  std::mt19937 rng(1234);
  for (int n = 1; n <= 8; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<int> img(n);
      std::iota(img.begin(), img.end(), 1);
      std::shuffle(img.begin(), img.end(), rng);
      Permutation p{img};
      CHECK(compose(p, p.inverse()) == Permutation::identity(n));
      CHECK(compose(p.inverse(), p) == Permutation::identity(n));
      CHECK(p.inverse().inverse() == p);
      CHECK(static_cast<int>(p.cycle_type().size()) == p.num_cycles());
      int total = 0;
      for (int len : p.cycle_type()) total += len;
      CHECK(total == n);
    }
  }
}

TEST_CASE("next_lex enumerates n! permutations in lexicographic order") {
  Permutation p = Permutation::identity(3);
  std::vector<Permutation> seen;
  seen.push_back(p);
  while (p.next_lex()) seen.push_back(p);
  CHECK(seen.size() == 6);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(p == Permutation::identity(3));  // wrapped back
}

TEST_CASE("set partitions are stored canonically") {
  SetPartition pi(6, {{5, 4}, {6, 2, 1}, {3}});
  CHECK(pi.blocks() ==
        std::vector<std::vector<int>>{{1, 2, 6}, {3}, {4, 5}});
  CHECK(pi.block_index_of(4) == 2);
  CHECK(pi.block_of(6) == std::vector<int>{1, 2, 6});
  CHECK(pi.num_blocks() == 3);
  CHECK_THROWS(SetPartition(3, {{1, 2}}));        // misses 3
  CHECK_THROWS(SetPartition(3, {{1, 2}, {2, 3}}));  // repeats 2
}

TEST_CASE("orbit partition and stability") {
  Permutation p = Permutation::from_cycles(6, {{2, 4}, {5, 6}});
  SetPartition orbits = orbit_partition(p);
  CHECK(orbits == SetPartition(6, {{1}, {2, 4}, {3}, {5, 6}}));
  CHECK(is_stable(orbits, p));
  CHECK(is_stable(SetPartition(6, {{1, 2, 4}, {3}, {5, 6}}), p));
  CHECK_FALSE(is_stable(SetPartition(6, {{1, 2}, {3, 4}, {5, 6}}), p));

  Permutation t = Permutation::from_cycles(3, {{1, 2}});
  CHECK(is_stable(SetPartition(3, {{1, 2, 3}}), t));
  CHECK(is_stable(SetPartition(3, {{1, 2}, {3}}), t));
  CHECK_FALSE(is_stable(SetPartition(3, {{1}, {2, 3}}), t));
}

TEST_CASE("stable partitions are exactly the coarsenings of the orbits") {
  for (int n = 1; n <= 5; ++n) {
    Permutation id = Permutation::identity(n);
    CHECK(stable_partitions(id).size() == static_cast<size_t>(bell(n)));
    Permutation g = Permutation::long_cycle(n);
    CHECK(stable_partitions(g).size() == 1);
  }
  Permutation p = Permutation::from_cycles(5, {{1, 3}, {4, 5}});
  std::vector<SetPartition> sp = stable_partitions(p);
  CHECK(sp.size() == static_cast<size_t>(bell(p.num_cycles())));
  for (const SetPartition& pi : sp) CHECK(is_stable(pi, p));
  std::set<SetPartition> distinct(sp.begin(), sp.end());
  CHECK(distinct.size() == sp.size());
  // coarsest first, orbit partition last
  CHECK(sp.front() == SetPartition(5, {{1, 2, 3, 4, 5}}));
  CHECK(sp.back() == orbit_partition(p));
}

TEST_CASE("stirling and bell numbers") {
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 5) == 1);
  CHECK(stirling2(4, 0) == 0);
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling1_signed(3, 1) == 2);
  CHECK(stirling1_signed(3, 2) == -3);
  CHECK(stirling1_signed(4, 4) == 1);
  CHECK(bell(0) == 1);
  CHECK(bell(4) == 15);
  CHECK(bell(5) == 52);
  for (int n = 0; n <= 7; ++n) {
    Int row_sum = 0;
    for (int k = 0; k <= n; ++k) row_sum += stirling2(n, k);
    CHECK(row_sum == bell(n));
  }
}

TEST_CASE("signed stirling numbers expand falling factorials") {
  for (int p = 1; p <= 6; ++p) {
    for (int x = 0; x <= 8; ++x) {
      Int falling = 1;
      for (int j = 0; j < p; ++j) falling *= (x - j);
      Int sum = 0;
      Int xpow = 1;
      for (int q = 0; q <= p; ++q) {
        sum += stirling1_signed(p, q) * xpow;
        xpow *= x;
      }
      CHECK(sum == falling);
    }
  }
}

TEST_CASE("the two stirling kinds are inverse transforms") {
  for (int n = 0; n <= 7; ++n) {
    for (int m = 0; m <= 7; ++m) {
      Int acc = 0;
      for (int k = 0; k <= 7; ++k)
        acc += stirling2(n, k) * stirling1_signed(k, m);
      CHECK(acc == (n == m ? 1 : 0));
    }
  }
}

TEST_CASE("integer partitions") {
  std::vector<std::vector<int>> p4 = partitions_of(4);
  std::vector<std::vector<int>> expect = {
      {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  CHECK(p4 == expect);
  CHECK(partitions_of(0) == std::vector<std::vector<int>>{{}});
  CHECK(partitions_of(7).size() == 15);
}
