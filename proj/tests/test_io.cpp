#include <doctest.h>

#include <string>
#include <vector>

#include "cactus/bijection.hpp"
#include "cactus/io.hpp"
#include "cactus/oracle.hpp"
#include "cactus/verify.hpp"

using namespace cactus;

TEST_CASE("permutation json round trip") {
  Permutation p = Permutation::from_cycles(4, {{1, 3}, {2, 4}});
  CHECK(perm_from_json(perm_to_json(p)) == p);
  CHECK_THROWS(perm_from_json(Json::parse("[1,1,3]")));
  CHECK_THROWS(perm_from_json(Json::parse("\"nope\"")));
}

TEST_CASE("set partition json round trip") {
  SetPartition sp(5, {{1, 4}, {2}, {3, 5}});
  CHECK(setpart_from_json(setpart_to_json(sp), 5) == sp);
  CHECK_THROWS(setpart_from_json(Json::parse("[[1,2]]"), 3));
}

TEST_CASE("factorization json round trip and validation") {
  for (const Factorization& f : enumerate_factorizations(3, 2))
    CHECK(factorization_from_json(factorization_to_json(f)) == f);

  Json bad = factorization_to_json(enumerate_factorizations(2, 2)[0]);
  bad["r"] = 7;
  CHECK_THROWS(factorization_from_json(bad));
  CHECK_THROWS(factorization_from_json(Json::parse(R"({"alphas": []})")));
}

TEST_CASE("partitioned cactus json round trip") {
  PartitionedCactus six = six_symbol_example();
  CHECK(pc_from_json(pc_to_json(six)) == six);

  Json missing = pc_to_json(six);
  missing["partitions"].erase(4);
  CHECK_THROWS(pc_from_json(missing));
}

TEST_CASE("tree json round trip") {
  CactusTree t = three_symbol_tree();
  CactusTree back = tree_from_json(tree_to_json(t));
  CHECK(back == t);
  CHECK(back.canonical_key() == t.canonical_key());
}

TEST_CASE("tree json accepts arbitrary ids and rejects dangling ones") {
  // same tree as three_symbol_tree but with sparse, shuffled ids
  Json j = Json::parse(R"({
    "r": 4, "root": 100,
    "vertices": [
      {"id": 100, "color": 1, "children": [7, 9, 11]},
      {"id": 20,  "color": 2, "children": [13]},
      {"id": 30,  "color": 2, "children": []},
      {"id": 40,  "color": 3, "children": [15]},
      {"id": 50,  "color": 3, "children": []},
      {"id": 60,  "color": 4, "children": [17, 19]}
    ],
    "polygons": [
      {"id": 7,  "arity": 1, "attach": 100, "descendants": [], "symbol": 1},
      {"id": 9,  "arity": 3, "attach": 100, "descendants": [30, 40], "symbol": 2},
      {"id": 11, "arity": 3, "attach": 100, "descendants": [20, 50], "symbol": 3},
      {"id": 13, "arity": 1, "attach": 20,  "descendants": [], "symbol": 1},
      {"id": 15, "arity": 2, "attach": 40,  "descendants": [60], "symbol": 1},
      {"id": 17, "arity": 1, "attach": 60,  "descendants": [], "symbol": 3},
      {"id": 19, "arity": 1, "attach": 60,  "descendants": [], "symbol": 2}
    ]
  })");
  CactusTree t = tree_from_json(j);
  CHECK(validate_tree(t).empty());
  CHECK(t.canonical_key() == three_symbol_tree().canonical_key());

  Json dangling = j;
  dangling["polygons"][0]["attach"] = 999;
  CHECK_THROWS_AS(tree_from_json(dangling), TreeError);

  Json dup = j;
  dup["vertices"][1]["id"] = 100;
  CHECK_THROWS_AS(tree_from_json(dup), TreeError);
}

TEST_CASE("avector json uses subset labels") {
  AVector a{3, {{subset_from_label("1,2", 3), 1}, {subset_from_label("1,3", 3), 2}}};
  Json j = avector_to_json(a);
  CHECK(j == Json::parse(R"({"1,2": 1, "1,3": 2})"));
  CHECK(avector_from_json(j, 3) == a);
  CHECK_THROWS(avector_from_json(Json::parse(R"({"1,2": -1})"), 3));
}

TEST_CASE("count table csv is lexicographic with a fixed header") {
  CountTable t = count_by_cycle_counts(3, 2);
  CHECK(count_table_to_csv(t, "p") ==
        "p_1,p_2,value\n"
        "1,1,1\n"
        "1,3,1\n"
        "2,2,3\n"
        "3,1,1\n");

  Json j = count_table_to_json(t, "p");
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 4);
  CHECK(j[0]["p"] == Json::parse("[1,1]"));
  CHECK(j[0]["value"] == "1");
  CHECK(j[2]["value"] == "3");
}

TEST_CASE("type table csv dots the parts") {
  TypeTable t = count_by_cycle_types(3, 2);
  std::string csv = type_table_to_csv(t);
  CHECK(csv.find("lambda_1,lambda_2,value\n") == 0);
  CHECK(csv.find("2.1,2.1,3\n") != std::string::npos);
  CHECK(csv.find("1.1.1,3,1\n") != std::string::npos);

  Json j = type_table_to_json(t);
  REQUIRE(j.size() == 4);
  CHECK(j[0].contains("lambda"));
  CHECK(j[0].contains("value"));
}

TEST_CASE("theorem2 report json schema") {
  Json jp = theorem2_report_to_json(theorem2_check(2, 2, 2));
  CHECK(jp["status"] == "pass");
  CHECK(jp["first_mismatch"].is_null());

  Json jf = theorem2_report_to_json(theorem2_check(2, 2, 2, Orientation::printed));
  CHECK(jf["status"] == "fail");
  REQUIRE(jf["first_mismatch"].is_object());
  CHECK(jf["first_mismatch"]["monomial"].size() == 4);  // two alphabets of two vars
  CHECK(jf["first_mismatch"]["lhs"] != jf["first_mismatch"]["rhs"]);
}

TEST_CASE("dot writers emit both node families") {
  CactusTree t = three_symbol_tree();
  std::string dot = tree_to_dot(t);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("v0") != std::string::npos);
  CHECK(dot.find("p6") != std::string::npos);

  std::string cdot = cactus_to_dot(six_symbol_example().cactus);
  CHECK(cdot.find("graph cactus") != std::string::npos);
  CHECK(cdot.find("g6") != std::string::npos);
}
