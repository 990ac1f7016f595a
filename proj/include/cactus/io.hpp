#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cactus/avector.hpp"
#include "cactus/cactus_tree.hpp"
#include "cactus/oracle.hpp"
#include "cactus/symfunc.hpp"

namespace cactus {

using Json = nlohmann::json;

// Permutations travel as 1-based image arrays.
Json perm_to_json(const Permutation& p);
Permutation perm_from_json(const Json& j);

Json setpart_to_json(const SetPartition& sp);
SetPartition setpart_from_json(const Json& j, int n);

// {"n": ..., "r": ..., "alphas": [[...], ...]}
Json factorization_to_json(const Factorization& f);
Factorization factorization_from_json(const Json& j);

// adds "partitions": [[[...], ...], ...]
Json pc_to_json(const PartitionedCactus& pc);
PartitionedCactus pc_from_json(const Json& j);

Json tree_to_json(const CactusTree& t);
CactusTree tree_from_json(const Json& j);

// {"1,3": 2, ...}
Json avector_to_json(const AVector& a);
AVector avector_from_json(const Json& j, int r);

// One factorization record per line.
void write_jsonl(std::ostream& os, const std::vector<Factorization>& records);
std::vector<Factorization> read_jsonl(std::istream& is);

// header key_1,...,key_r,value; rows in lexicographic key order
std::string count_table_to_csv(const CountTable& t, const std::string& key_name);
Json count_table_to_json(const CountTable& t, const std::string& key_name);

// cycle-type tables: parts joined by '.', e.g. "2.1"
std::string type_table_to_csv(const TypeTable& t);
Json type_table_to_json(const TypeTable& t);

// {"status": "pass"|"fail", "first_mismatch": null | {monomial, lhs, rhs}}
Json theorem2_report_to_json(const Theorem2Report& rep);

// visual debugging only
std::string tree_to_dot(const CactusTree& t);
std::string cactus_to_dot(const Factorization& f);

}  // namespace cactus
