#include "cactus/cactus_tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cactus {

int CactusTree::n() const {
  std::set<int> symbols;
  for (const auto& p : polygons) symbols.insert(p.symbol);
  return static_cast<int>(symbols.size());
}

static void key_rec(const CactusTree& t, int vid, std::map<int, int>& symbol_names,
                    std::ostringstream& os) {
  const TreeVertex& v = t.vertices[vid];
  os << '(' << v.color;
  for (int pid : v.children) {
    const TreePolygon& p = t.polygons[pid];
    auto [it, inserted] = symbol_names.emplace(p.symbol, static_cast<int>(symbol_names.size()) + 1);
    os << '[' << p.arity << ',' << it->second << ';';
    for (int d : p.descendants) key_rec(t, d, symbol_names, os);
    os << ']';
  }
  os << ')';
}

std::string CactusTree::canonical_key() const {
  std::ostringstream os;
  std::map<int, int> symbol_names;
  key_rec(*this, root, symbol_names, os);
  return os.str();
}

static int next_color(int c, int r) { return c % r + 1; }

std::vector<std::string> validate_tree(const CactusTree& t) {
  std::vector<std::string> bad;
  auto flag = [&](const std::string& msg) { bad.push_back(msg); };
  const int nv = static_cast<int>(t.vertices.size());
  const int np = static_cast<int>(t.polygons.size());
  if (t.r < 2) {
    flag("r must be >= 2");
    return bad;
  }
  if (t.root < 0 || t.root >= nv) {
    flag("root id out of range");
    return bad;
  }
  for (int i = 0; i < nv; ++i)
    if (t.vertices[i].color < 1 || t.vertices[i].color > t.r)
      flag("vertex " + std::to_string(i) + ": color out of range");
  for (int i = 0; i < np; ++i) {
    const TreePolygon& p = t.polygons[i];
    if (p.arity < 1 || p.arity > t.r) flag("polygon " + std::to_string(i) + ": arity out of range");
    if (p.attach < 0 || p.attach >= nv) flag("polygon " + std::to_string(i) + ": attach out of range");
    if (static_cast<int>(p.descendants.size()) != p.arity - 1)
      flag("polygon " + std::to_string(i) + ": descendant count != arity-1");
    for (int d : p.descendants)
      if (d < 0 || d >= nv) flag("polygon " + std::to_string(i) + ": descendant out of range");
  }
  if (!bad.empty()) return bad;  // id errors make the rest unreadable

  if (t.vertices[t.root].color != 1) flag("root is not a color-1 vertex");

  // attachment consistency
  std::vector<int> child_owner(np, -1);
  for (int v = 0; v < nv; ++v)
    for (int pid : t.vertices[v].children) {
      if (child_owner[pid] != -1) flag("polygon " + std::to_string(pid) + ": listed as child twice");
      child_owner[pid] = v;
    }
  for (int i = 0; i < np; ++i) {
    if (child_owner[i] != t.polygons[i].attach)
      flag("polygon " + std::to_string(i) + ": attach does not match the child list");
    int c = t.vertices[t.polygons[i].attach].color;
    for (int k = 0; k < static_cast<int>(t.polygons[i].descendants.size()); ++k) {
      c = next_color(c, t.r);
      if (t.vertices[t.polygons[i].descendants[k]].color != c)
        flag("polygon " + std::to_string(i) + ": descendant " + std::to_string(k) +
             " has the wrong color");
    }
  }

  // every non-root vertex hangs below exactly one polygon
  std::vector<int> parent_count(nv, 0);
  for (const auto& p : t.polygons)
    for (int d : p.descendants) ++parent_count[d];
  if (parent_count[t.root] != 0) flag("root appears as a descendant");
  for (int v = 0; v < nv; ++v)
    if (v != t.root && parent_count[v] != 1)
      flag("vertex " + std::to_string(v) + ": expected exactly one parent polygon");

  // reachability
  std::vector<char> seen(nv, 0);
  std::vector<int> stack{t.root};
  seen[t.root] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int pid : t.vertices[v].children)
      for (int d : t.polygons[pid].descendants)
        if (!seen[d]) {
          seen[d] = 1;
          stack.push_back(d);
        }
  }
  for (int v = 0; v < nv; ++v)
    if (!seen[v]) flag("vertex " + std::to_string(v) + ": unreachable from the root");

  // symbol patterns: distinct attach colors, arity = cyclic gap to the next one
  std::map<int, std::vector<std::pair<int, int>>> by_symbol;  // symbol -> (color, arity)
  for (const auto& p : t.polygons)
    by_symbol[p.symbol].push_back({t.vertices[p.attach].color, p.arity});
  for (auto& [s, list] : by_symbol) {
    std::sort(list.begin(), list.end());
    for (size_t k = 0; k < list.size(); ++k) {
      if (k + 1 < list.size() && list[k].first == list[k + 1].first) {
        flag("symbol " + std::to_string(s) + ": two polygons at the same color");
        break;
      }
      int gap = k + 1 < list.size() ? list[k + 1].first - list[k].first
                                    : t.r - list[k].first + list[0].first;
      if (list[k].second != gap) {
        flag("symbol " + std::to_string(s) + ": arity at color " + std::to_string(list[k].first) +
             " does not equal the cyclic gap");
        break;
      }
    }
  }
  return bad;
}

AVector avector_of(const CactusTree& t) {
  auto bad = validate_tree(t);
  if (!bad.empty()) throw TreeError("avector_of: invalid tree: " + bad.front());
  std::map<int, unsigned> mask_of_symbol;
  for (const auto& p : t.polygons)
    mask_of_symbol[p.symbol] |= 1u << (t.vertices[p.attach].color - 1);
  AVector a;
  a.r = t.r;
  for (auto& [s, mask] : mask_of_symbol) a.counts[mask] += 1;
  return a;
}

}  // namespace cactus
