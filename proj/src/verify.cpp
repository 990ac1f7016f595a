#include "cactus/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "cactus/bijection.hpp"
#include "cactus/formula.hpp"
#include "cactus/io.hpp"
#include "cactus/jackson.hpp"
#include "cactus/stirling.hpp"
#include "cactus/symfunc.hpp"

namespace cactus {

namespace {

std::string vec_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string avec_str(const AVector& a) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto& [mask, cnt] : a.counts) {
    if (!first) os << ", ";
    os << "a[" << subset_label(mask, a.r) << "]=" << cnt;
    first = false;
  }
  os << '}';
  return os.str();
}

// Runs body(result); fills in elapsed time and enforces an optional limit.
template <class F>
CheckResult timed_check(const std::string& name, long long limit_ms, F body) {
  CheckResult res;
  res.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(res);
  } catch (const BudgetError&) {
    throw;  // budget refusals propagate to the caller (exit code 2)
  } catch (const std::exception& e) {
    res.pass = false;
    if (res.detail.empty()) res.detail = std::string("exception: ") + e.what();
  }
  res.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
               .count();
  if (res.pass && limit_ms > 0 && res.ms > limit_ms) {
    res.pass = false;
    res.detail = "exceeded time limit: " + std::to_string(res.ms) + " ms > " +
                 std::to_string(limit_ms) + " ms";
  }
  return res;
}

Matrix first_minor(const Matrix& m) {
  Matrix sub;
  for (size_t i = 1; i < m.size(); ++i)
    sub.emplace_back(m[i].begin() + 1, m[i].end());
  return sub;
}

bool tables_equal(const CountTable& a, const CountTable& b, std::string& diff) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ia == a.end() || (ib != b.end() && ib->first < ia->first)) {
      diff = "key " + vec_str(ib->first) + " only on the right (" + ib->second.str() + ")";
      return false;
    }
    if (ib == b.end() || ia->first < ib->first) {
      diff = "key " + vec_str(ia->first) + " only on the left (" + ia->second.str() + ")";
      return false;
    }
    if (ia->second != ib->second) {
      diff = "key " + vec_str(ia->first) + ": " + ia->second.str() + " != " + ib->second.str();
      return false;
    }
    ++ia;
    ++ib;
  }
  return true;
}

}  // namespace

// ---- worked example data ----------------------------------------------

PartitionedCactus six_symbol_example() {
  PartitionedCactus pc;
  pc.cactus.n = 6;
  pc.cactus.alphas = {
      Permutation::from_cycles(6, {{1, 2}}),
      Permutation::from_cycles(6, {{2, 4}, {5, 6}}),
      Permutation::identity(6),
      Permutation::from_cycles(6, {{2, 3}, {4, 6}}),
      Permutation::identity(6),
  };
  pc.partitions = {
      SetPartition(6, {{1, 2, 6}, {3}, {4, 5}}),
      SetPartition(6, {{1, 2, 3, 4}, {5, 6}}),
      SetPartition(6, {{1, 2, 4}, {3}, {5, 6}}),
      SetPartition(6, {{1, 2, 3, 5}, {4, 6}}),
      SetPartition(6, {{1, 2, 3}, {4}, {5}, {6}}),
  };
  return pc;
}

PartitionedCactus three_symbol_example() {
  PartitionedCactus pc;
  pc.cactus.n = 3;
  pc.cactus.alphas = {
      Permutation::from_cycles(3, {{1, 2}}),
      Permutation::from_cycles(3, {{1, 3}}),
      Permutation::from_cycles(3, {{1, 2}}),
      Permutation::from_cycles(3, {{1, 3}}),
  };
  pc.partitions = {
      SetPartition(3, {{1, 2, 3}}),
      SetPartition(3, {{1, 3}, {2}}),
      SetPartition(3, {{1, 2}, {3}}),
      SetPartition(3, {{1, 2, 3}}),
  };
  return pc;
}

// The stored tree the three-symbol example maps to. Vertices: 0 root (color
// 1), 1 and 2 color 2, 3 and 4 color 3, 5 color 4.
CactusTree three_symbol_tree() {
  CactusTree t;
  t.r = 4;
  t.root = 0;
  t.vertices.resize(6);
  t.vertices[0] = {1, {0, 1, 2}};
  t.vertices[1] = {2, {3}};
  t.vertices[2] = {2, {}};
  t.vertices[3] = {3, {4}};
  t.vertices[4] = {3, {}};
  t.vertices[5] = {4, {5, 6}};
  t.polygons.resize(7);
  t.polygons[0] = {1, 0, {}, 1};
  t.polygons[1] = {3, 0, {2, 3}, 2};
  t.polygons[2] = {3, 0, {1, 4}, 3};
  t.polygons[3] = {1, 1, {}, 1};
  t.polygons[4] = {2, 3, {5}, 1};
  t.polygons[5] = {1, 5, {}, 3};
  t.polygons[6] = {1, 5, {}, 2};
  return t;
}

Grid default_formula_grid() { return {{2, 6}, {3, 5}, {4, 4}, {5, 3}}; }
Grid default_bijection_grid() { return {{2, 4}, {3, 4}, {4, 3}}; }

CheckResult check_delta_closed_forms(int n_max, int r_max) {
  return timed_check("delta-closed-forms", 1000, [&](CheckResult& res) {
    long long checked = 0;
    for (int r = 2; r <= std::min(3, r_max); ++r)
      for (int n = 1; n <= n_max; ++n)
        for (const AVector& a : enumerate_avectors_by_total(r, n)) {
          const std::vector<int> p = a.derived_p();
          const Matrix m = delta_matrix(a);
          for (int c = 0; c < r; ++c) {
            Int colsum = 0;
            for (int w = 0; w < r; ++w) colsum += m[w][c];
            if (colsum != (c == 0 ? 1 : 0)) {
              res.pass = false;
              res.detail = "column " + std::to_string(c + 1) + " sum wrong at a=" + avec_str(a);
              return;
            }
          }
          const Int det = determinant(m);
          if (det != determinant(first_minor(m))) {
            res.pass = false;
            res.detail = "first-minor reduction fails at a=" + avec_str(a);
            return;
          }
          Int expected;
          if (r == 2) {
            expected = p[1];
          } else {
            const Int a1 = a.at(subset_mask({1}, r));
            const Int a3 = a.at(subset_mask({3}, r));
            expected = Int(p[1]) * p[2] - a3 * (p[2] - a1);
          }
          if (det != expected) {
            res.pass = false;
            res.detail = "det mismatch at r=" + std::to_string(r) + " a=" + avec_str(a) + ": " +
                         det.str() + " != " + expected.str();
            return;
          }
          ++checked;
        }
    res.detail = std::to_string(checked) + " a-vectors checked (r=2,3; n<=" +
                 std::to_string(n_max) + ")";
  });
}

CheckResult check_formula_vs_oracle(const Grid& grid, const Budget& budget) {
  return timed_check("formula-vs-oracle", 120000, [&](CheckResult& res) {
    Int upfront = 0;  // price the whole sweep before starting any of it
    for (auto [r, n_max] : grid)
      for (int n = 1; n <= n_max; ++n) upfront += pow_int(factorial(n), r - 1);
    budget.charge(upfront, "formula-vs-oracle sweep");
    int swept = 0;
    for (auto [r, n_max] : grid)
      for (int n = 1; n <= n_max; ++n) {
        const CountTable oracle = count_by_cycle_counts(n, r, budget);
        Int total = 0;
        for (auto& [q, v] : oracle) total += v;
        if (total != pow_int(factorial(n), r - 1)) {
          res.pass = false;
          res.detail = "oracle total wrong at n=" + std::to_string(n) + " r=" + std::to_string(r);
          return;
        }
        const CountTable formula = k_by_cycle_counts(n, r);
        std::string diff;
        if (!tables_equal(formula, oracle, diff)) {
          res.pass = false;
          res.detail = "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                       " (formula vs oracle): " + diff;
          return;
        }
        ++swept;
      }
    res.detail = std::to_string(swept) + " (n,r) tables compared";
  });
}

CheckResult check_jackson(const Grid& grid, int r2_n_max, const Budget& budget) {
  return timed_check("jackson-forms", 60000, [&](CheckResult& res) {
    for (auto [r, n_max] : grid)
      for (int n = 1; n <= n_max; ++n) {
        const EquivalenceReport rep = jackson_forms_agree(n, r, budget);
        if (!rep.ok) {
          res.pass = false;
          res.detail = rep.detail;
          return;
        }
        const IntPoly jp = jackson_polynomial(n, r, budget);
        const Int bridge = pow_int(Int(n), r - 1);
        std::vector<int> p(r, 1);
        while (true) {
          if (series_coefficient(n, r, p) != bridge * jp.coefficient(p)) {
            res.pass = false;
            res.detail = "bridge fails at n=" + std::to_string(n) + " r=" + std::to_string(r) +
                         " p=" + vec_str(p);
            return;
          }
          int i = r - 1;
          while (i >= 0 && p[i] == n) p[i--] = 1;
          if (i < 0) break;
          ++p[i];
        }
      }
    for (int n = 1; n <= r2_n_max; ++n) {
      const EquivalenceReport rep = jackson_r2_identity(n);
      if (!rep.ok) {
        res.pass = false;
        res.detail = rep.detail;
        return;
      }
    }
    res.detail = "product form, multinomial form and determinant series agree; r=2 identity holds to n=" +
                 std::to_string(r2_n_max);
  });
}

CheckResult check_bijection_roundtrip(const Grid& grid, const Budget& budget) {
  return timed_check("bijection-roundtrip", 300000, [&](CheckResult& res) {
    Int upfront = 0;  // factorization sweeps alone; exact totals are charged per pair
    for (auto [r, n_max] : grid)
      for (int n = 1; n <= n_max; ++n) upfront += pow_int(factorial(n), r - 1);
    budget.charge(upfront, "bijection roundtrip sweep");
    long long checked = 0, failures = 0;
    for (auto [r, n_max] : grid)
      for (int n = 1; n <= n_max; ++n) {
        std::map<AVector, std::set<std::string>> images;
        for_each_partitioned_cactus(n, r, budget, [&](const PartitionedCactus& pc) {
          ++checked;
          try {
            const CactusTree t = forward(pc);
            const auto bad = validate_tree(t);
            if (!bad.empty()) throw TreeError("forward image invalid: " + bad.front());
            if (!(inverse(t) == pc)) throw TreeError("roundtrip returned a different object");
            images[avector_of(t)].insert(t.canonical_key());
          } catch (const std::exception& e) {
            ++failures;
            if (res.detail.empty())
              res.detail = std::string(e.what()) + " at pc=" + pc_to_json(pc).dump();
          }
        });
        for (auto& [a, keys] : images) {
          if (Int(keys.size()) != tree_count(a)) {
            ++failures;
            if (res.detail.empty())
              res.detail = "image count " + std::to_string(keys.size()) + " != tree_count " +
                           tree_count(a).str() + " at n=" + std::to_string(n) +
                           " r=" + std::to_string(r) + " a=" + avec_str(a);
          }
        }
      }
    if (failures > 0) res.pass = false;
    if (res.pass)
      res.detail = std::to_string(checked) + " partitioned cacti roundtripped, 0 failures";
  });
}

CheckResult check_tree_enumeration(int n_max, int r_max, const Budget& budget) {
  return timed_check("tree-enumeration", 60000, [&](CheckResult& res) {
    long long checked = 0;
    for (int r = 2; r <= r_max; ++r) {
      std::map<AVector, std::set<std::string>> images;
      for (int n = 1; n <= n_max; ++n)
        for_each_partitioned_cactus(n, r, budget, [&](const PartitionedCactus& pc) {
          const CactusTree t = forward(pc);
          images[avector_of(t)].insert(t.canonical_key());
        });
      for (int n = 1; n <= n_max; ++n)
        for (const AVector& a : enumerate_avectors_by_total(r, n)) {
          const auto trees = enumerate_cactus_trees(a);
          if (Int(trees.size()) != tree_count(a)) {
            res.pass = false;
            res.detail = "enumerated " + std::to_string(trees.size()) + " trees, formula says " +
                         tree_count(a).str() + " at a=" + avec_str(a);
            return;
          }
          std::set<std::string> keys;
          for (const CactusTree& t : trees) keys.insert(t.canonical_key());
          if (keys.size() != trees.size()) {
            res.pass = false;
            res.detail = "duplicate canonical trees at a=" + avec_str(a);
            return;
          }
          auto it = images.find(a);
          const std::set<std::string> empty;
          if (keys != (it == images.end() ? empty : it->second)) {
            res.pass = false;
            res.detail = "enumerated tree set differs from forward images at a=" + avec_str(a);
            return;
          }
          ++checked;
        }
    }
    res.detail = std::to_string(checked) + " contents a enumerated and matched (n<=" +
                 std::to_string(n_max) + ", r<=" + std::to_string(r_max) + ")";
  });
}

CheckResult check_worked_examples() {
  return timed_check("worked-examples", 0, [&](CheckResult& res) {
    auto fail = [&](const std::string& msg) {
      res.pass = false;
      res.detail = msg;
    };
    const PartitionedCactus six = six_symbol_example();
    if (!six.cactus.product_is_long_cycle()) return fail("six-symbol product != long cycle");
    const PartitionedCactus three = three_symbol_example();
    if (!three.cactus.product_is_long_cycle()) return fail("three-symbol product != long cycle");

    const CactusTree t6 = forward(six);
    if (!validate_tree(t6).empty()) return fail("six-symbol image invalid");
    AVector expected6;
    expected6.r = 5;
    for (auto t : {std::vector<int>{2}, {1, 2}, {2, 4}, {1, 3, 4, 5}, {1, 3, 4}, {1, 2, 3, 4, 5}})
      expected6.counts[subset_mask(t, 5)] = 1;
    if (!(avector_of(t6) == expected6))
      return fail("six-symbol a-vector is " + avec_str(avector_of(t6)));
    std::map<int, int> census;
    for (const auto& poly : t6.polygons) census[poly.arity] += 1;
    const std::map<int, int> expected_census{{1, 10}, {2, 4}, {3, 1}, {4, 1}, {5, 1}};
    if (census != expected_census) return fail("six-symbol polygon census off");
    if (!(inverse(t6) == six)) return fail("six-symbol tree does not invert to its cactus");

    const CactusTree t3 = three_symbol_tree();
    if (!validate_tree(t3).empty()) return fail("stored three-symbol tree invalid");
    if (!(inverse(t3) == three)) return fail("three-symbol tree inverts to the wrong cactus");
    if (forward(three).canonical_key() != t3.canonical_key())
      return fail("three-symbol cactus maps to a different tree");
    res.detail = "both factorization chains, the six-symbol map and the three-symbol inversion check out";
  });
}

CheckResult check_partitioned_counts(const Grid& grid, const Budget& budget) {
  return timed_check("partitioned-counts", 0, [&](CheckResult& res) {
    for (auto [r, n_max] : grid)
      for (int n = 1; n <= n_max; ++n) {
        const CountTable oracle = count_partitioned_by_p(n, r, budget);
        const CountTable closed = partitioned_counts_closed_form(n, r);
        std::string diff;
        if (!tables_equal(closed, oracle, diff)) {
          res.pass = false;
          res.detail = "closed form vs oracle at n=" + std::to_string(n) +
                       " r=" + std::to_string(r) + ": " + diff;
          return;
        }
        const CountTable k = k_by_cycle_counts(n, r);
        for (auto& [p, v] : closed) {
          if (partitioned_count_from_k(k, p) != v) {
            res.pass = false;
            res.detail = "Stirling aggregation differs at n=" + std::to_string(n) +
                         " r=" + std::to_string(r) + " p=" + vec_str(p);
            return;
          }
        }
        // and nowhere else nonzero
        std::vector<int> p(r, 1);
        while (true) {
          if (!closed.count(p) && partitioned_count_from_k(k, p) != 0) {
            res.pass = false;
            res.detail = "Stirling aggregation nonzero off-support at n=" + std::to_string(n) +
                         " r=" + std::to_string(r) + " p=" + vec_str(p);
            return;
          }
          int i = r - 1;
          while (i >= 0 && p[i] == n) p[i--] = 1;
          if (i < 0) break;
          ++p[i];
        }
      }
    res.detail = "closed form, oracle sweep and Stirling aggregation agree on the whole grid";
  });
}

CheckResult check_theorem2(const Grid& grid, const Budget& budget) {
  return timed_check("theorem2-orientations", 60000, [&](CheckResult& res) {
    for (auto [r, n_max] : grid)
      for (int n = 1; n <= n_max; ++n) {
        const Theorem2Report rep = theorem2_check(n, r, n, Orientation::verified, budget);
        if (!rep.ok) {
          res.pass = false;
          res.detail = "verified orientation fails at n=" + std::to_string(n) +
                       " r=" + std::to_string(r) + ": " + rep.detail;
          return;
        }
      }
    const Theorem2Report printed = theorem2_check(2, 2, 2, Orientation::printed, budget);
    if (printed.ok) {
      res.pass = false;
      res.detail = "printed orientation unexpectedly passes at n=2 r=2";
      return;
    }
    res.detail = "verified orientation holds on the grid; printed orientation fails at n=2 r=2 (" +
                 printed.detail + ")";
  });
}

std::optional<Suite> suite_from_name(const std::string& name) {
  if (name == "delta") return Suite::delta;
  if (name == "formula") return Suite::formula;
  if (name == "jackson") return Suite::jackson;
  if (name == "bijection") return Suite::bijection;
  if (name == "theorem2") return Suite::theorem2;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

static Grid apply_limits(Grid g, std::optional<int> n_max, std::optional<int> r_max) {
  Grid out;
  for (auto [r, nm] : g) {
    if (r_max && r > *r_max) continue;
    out.push_back({r, n_max ? *n_max : nm});
  }
  return out;
}

std::vector<CheckResult> run_suite(Suite s, std::optional<int> n_max, std::optional<int> r_max,
                                   const Budget& budget) {
  std::vector<CheckResult> out;
  const bool all = s == Suite::all;
  if (all || s == Suite::delta)
    out.push_back(check_delta_closed_forms(n_max.value_or(8), r_max.value_or(3)));
  if (all || s == Suite::formula) {
    out.push_back(check_formula_vs_oracle(apply_limits(default_formula_grid(), n_max, r_max), budget));
    out.push_back(check_partitioned_counts(apply_limits(default_formula_grid(), n_max, r_max), budget));
  }
  if (all || s == Suite::jackson)
    out.push_back(check_jackson(apply_limits(default_formula_grid(), n_max, r_max),
                                n_max.value_or(10), budget));
  if (all || s == Suite::bijection) {
    out.push_back(check_bijection_roundtrip(apply_limits(default_bijection_grid(), n_max, r_max), budget));
    out.push_back(check_tree_enumeration(std::min(n_max.value_or(3), 3), r_max.value_or(3), budget));
    out.push_back(check_worked_examples());
  }
  if (all || s == Suite::theorem2)
    out.push_back(check_theorem2(apply_limits({{2, 3}, {3, 3}}, n_max, r_max), budget));
  return out;
}

}  // namespace cactus
