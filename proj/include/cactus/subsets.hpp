#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cactus {

// Nonempty subsets t of the color set {1..r} are carried as bitmasks:
// bit l-1 set <=> color l in t. Enumeration order is ascending mask value.

inline bool subset_contains(unsigned mask, int color) { return (mask >> (color - 1)) & 1u; }

inline std::vector<int> subset_elements(unsigned mask, int r) {
  std::vector<int> out;
  for (int l = 1; l <= r; ++l)
    if (subset_contains(mask, l)) out.push_back(l);
  return out;
}

inline unsigned subset_mask(const std::vector<int>& elements, int r) {
  unsigned m = 0;
  for (int l : elements) {
    if (l < 1 || l > r) throw std::invalid_argument("subset_mask: color out of range");
    m |= 1u << (l - 1);
  }
  return m;
}

// Label used in the JSON form of an a-vector: "1,3,4".
std::string subset_label(unsigned mask, int r);
unsigned subset_from_label(const std::string& label, int r);

// Cyclic distance from i to the next element of t after i, walking
// i+1, i+2, ... mod r; a singleton {i} wraps all the way around (gap r).
// Requires i in t.
int cyclic_gap(unsigned mask, int r, int i);

}  // namespace cactus
