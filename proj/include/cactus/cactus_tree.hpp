#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cactus/avector.hpp"

namespace cactus {

struct TreeVertex {
  int color = 0;              // 1..r
  std::vector<int> children;  // polygon ids, leftmost first

  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
};

// A j-gon hanging below its attach vertex. Descendant vertices carry the
// colors attach_color+1, ..., attach_color+j-1 (cyclically), in stored order.
struct TreePolygon {
  int arity = 0;
  int attach = 0;                 // vertex id
  std::vector<int> descendants;   // vertex ids, size arity-1
  int symbol = 0;

  friend bool operator==(const TreePolygon&, const TreePolygon&) = default;
};

struct CactusTree {
  int r = 0;
  int root = 0;
  std::vector<TreeVertex> vertices;
  std::vector<TreePolygon> polygons;

  int n() const;  // number of distinct polygon symbols

  // Structure-only equality key: DFS serialization with symbols renamed by
  // first appearance, so trees match up to symbol renaming.
  std::string canonical_key() const;

  friend bool operator==(const CactusTree&, const CactusTree&) = default;
};

struct TreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structural checks; returns human-readable violations (empty when valid):
//  - ids in range, root has color 1, arities within 1..r
//  - descendant colors follow the attach color cyclically
//  - children lists mirror attachment, every non-root vertex is the
//    descendant of exactly one polygon, everything reachable from the root
//  - per symbol: attach colors distinct and arities equal the cyclic gaps
std::vector<std::string> validate_tree(const CactusTree& t);

// Content of the tree: a_t = number of symbols whose attach-color set is t.
// Requires a valid tree.
AVector avector_of(const CactusTree& t);

}  // namespace cactus
