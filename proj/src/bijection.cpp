#include "cactus/bijection.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace cactus {

namespace {

int next_color(int c, int r) { return c % r + 1; }
int prev_color(int c, int r) { return (c + r - 2) % r + 1; }

void check_pc(const PartitionedCactus& pc) {
  const int n = pc.cactus.n;
  const int r = pc.cactus.r();
  if (n < 1 || r < 2) throw std::invalid_argument("bijection: need n >= 1, r >= 2");
  for (const Permutation& a : pc.cactus.alphas)
    if (a.size() != n) throw std::invalid_argument("bijection: permutation size mismatch");
  if (!pc.cactus.product_is_long_cycle())
    throw std::invalid_argument("bijection: product is not the long cycle");
  if (static_cast<int>(pc.partitions.size()) != r)
    throw std::invalid_argument("bijection: expected one partition per factor");
  for (int i = 0; i < r; ++i)
    if (!is_stable(pc.partitions[i], pc.cactus.alphas[i]))
      throw std::invalid_argument("bijection: partition " + std::to_string(i + 1) +
                                  " is not stable under its factor");
}

}  // namespace

std::vector<Permutation> edge_labels(const Factorization& c) {
  const int r = c.r();
  if (r < 2) throw std::invalid_argument("edge_labels: r must be >= 2");
  std::vector<Permutation> sigma(r, Permutation::identity(c.n));
  sigma[r - 1] = c.alphas[r - 1].inverse();
  for (int u = r - 1; u >= 2; --u)
    sigma[u - 1] = compose(sigma[u], c.alphas[u - 1].inverse());
  return sigma;
}

CactusTree forward(const PartitionedCactus& pc) {
  check_pc(pc);
  const int n = pc.cactus.n;
  const int r = pc.cactus.r();
  const std::vector<Permutation> sigma = edge_labels(pc.cactus);

  // One tree vertex per block; slots are the block's edge labels, ascending.
  CactusTree t;
  t.r = r;
  enum SlotState { kFree, kReplaced, kConsumed };
  struct Slot {
    int label;
    SlotState state = kFree;
    int poly = -1;
  };
  std::vector<std::vector<Slot>> slots;              // per vertex
  std::vector<std::vector<int>> vertex_of_block(r);  // [u-1][block index] -> vertex id
  for (int u = 1; u <= r; ++u) {
    for (const auto& block : pc.partitions[u - 1].blocks()) {
      std::vector<int> labels;
      for (int g : block) labels.push_back(sigma[u - 1](g));
      std::sort(labels.begin(), labels.end());
      TreeVertex v;
      v.color = u;
      vertex_of_block[u - 1].push_back(static_cast<int>(t.vertices.size()));
      t.vertices.push_back(v);
      std::vector<Slot> sv;
      for (int lab : labels) sv.push_back({lab, kFree, -1});
      slots.push_back(std::move(sv));
    }
  }
  auto vertex_of = [&](int u, int g) {
    return vertex_of_block[u - 1][pc.partitions[u - 1].block_index_of(g)];
  };
  t.root = vertex_of(1, 1);
  auto slot_at = [&](int vid, int label) -> Slot& {
    auto& sv = slots[vid];
    auto it = std::lower_bound(sv.begin(), sv.end(), label,
                               [](const Slot& s, int x) { return s.label < x; });
    if (it == sv.end() || it->label != label)
      throw InternalCheckError("forward: missing slot for label " + std::to_string(label));
    return *it;
  };
  auto max_label = [&](int vid) { return slots[vid].back().label; };

  for (int g = 1; g <= n; ++g) {
    std::vector<char> in_s(r + 1, 0);
    for (int u = 1; u <= r; ++u)
      if (sigma[u - 1](g) == max_label(vertex_of(u, g))) in_s[u] = 1;
    if (in_s[1] && vertex_of(1, g) == t.root) {
      in_s[1] = 0;  // the root's own maximum starts the tree, not a polygon
    } else if (std::all_of(in_s.begin() + 1, in_s.end(), [](char c) { return c != 0; })) {
      throw InternalCheckError("forward: full cyclic run away from the root");
    }
    for (int start = 1; start <= r; ++start) {
      if (!in_s[start] || in_s[prev_color(start, r)]) continue;
      int len = 0;
      for (int c = start; in_s[c] && len < r; c = next_color(c, r)) ++len;
      if (len > r - 1) throw InternalCheckError("forward: run longer than r-1");
      const int c_att = prev_color(start, r);
      const int v_att = vertex_of(c_att, g);
      Slot& s_att = slot_at(v_att, sigma[c_att - 1](g));
      if (s_att.state != kFree) throw InternalCheckError("forward: attach slot already used");
      TreePolygon poly;
      poly.arity = len + 1;
      poly.attach = v_att;
      poly.symbol = g;
      int c = start;
      for (int k = 0; k < len; ++k, c = next_color(c, r)) {
        const int d = vertex_of(c, g);
        Slot& s_con = slot_at(d, sigma[c - 1](g));
        if (s_con.state != kFree) throw InternalCheckError("forward: descendant slot already used");
        s_con.state = kConsumed;
        poly.descendants.push_back(d);
      }
      const int pid = static_cast<int>(t.polygons.size());
      s_att.state = kReplaced;
      s_att.poly = pid;
      t.polygons.push_back(std::move(poly));
    }
  }

  // Remaining half-edges become 1-gons; assemble children in slot order.
  for (int vid = 0; vid < static_cast<int>(t.vertices.size()); ++vid) {
    const int u = t.vertices[vid].color;
    const Permutation inv = sigma[u - 1].inverse();
    for (Slot& s : slots[vid]) {
      if (s.state == kConsumed) continue;
      if (s.state == kFree) {
        TreePolygon one;
        one.arity = 1;
        one.attach = vid;
        one.symbol = inv(s.label);
        s.state = kReplaced;
        s.poly = static_cast<int>(t.polygons.size());
        t.polygons.push_back(std::move(one));
      }
      t.vertices[vid].children.push_back(s.poly);
    }
  }
  return t;
}

PartitionedCactus inverse(const CactusTree& t) {
  {
    auto bad = validate_tree(t);
    if (!bad.empty()) throw TreeError("inverse: " + bad.front());
  }
  const int r = t.r;
  const int np = static_cast<int>(t.polygons.size());
  const int nv = static_cast<int>(t.vertices.size());

  // Per symbol: its unique vertex of each color (attach vertices + descendants).
  std::map<int, std::vector<int>> vertex_of_symbol;  // symbol -> [color-1] -> vid
  for (int pid = 0; pid < np; ++pid) {
    const TreePolygon& p = t.polygons[pid];
    auto [it, inserted] = vertex_of_symbol.emplace(p.symbol, std::vector<int>(r, -1));
    auto place = [&](int color, int vid) {
      if (it->second[color - 1] != -1)
        throw TreeError("inverse: symbol touches a color twice");
      it->second[color - 1] = vid;
    };
    int c = t.vertices[p.attach].color;
    place(c, p.attach);
    for (int d : p.descendants) {
      c = c % r + 1;
      place(c, d);
    }
  }
  const int n = static_cast<int>(vertex_of_symbol.size());
  for (auto& [s, per_color] : vertex_of_symbol)
    for (int c = 1; c <= r; ++c)
      if (per_color[c - 1] == -1)
        throw TreeError("inverse: symbol misses color " + std::to_string(c));

  // Incident polygons of a vertex: children left to right, parent last.
  std::vector<std::vector<int>> incident(nv);
  for (int v = 0; v < nv; ++v) incident[v] = t.vertices[v].children;
  for (int pid = 0; pid < np; ++pid)
    for (int d : t.polygons[pid].descendants) incident[d].push_back(pid);

  // labels[pid][c-1]: the c-color label recovered for that polygon (0 = none).
  std::vector<std::vector<int>> labels(np, std::vector<int>(r, 0));
  auto polygon_with_label = [&](int color, int value) {
    for (int pid = 0; pid < np; ++pid)
      if (labels[pid][color - 1] == value) return pid;
    throw TreeError("inverse: no polygon carries the needed label");
  };
  auto assign_leftmost = [&](int vid, int color, int value) {
    for (int pid : incident[vid])
      if (labels[pid][color - 1] == 0) {
        labels[pid][color - 1] = value;
        return;
      }
    throw TreeError("inverse: vertex has no unlabeled incidence left");
  };

  if (t.vertices[t.root].children.empty()) throw TreeError("inverse: root has no children");
  labels[t.vertices[t.root].children[0]][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int u = r; u >= 2; --u) {
      const int from_color = (u == r) ? 1 : u + 1;
      const int beta = t.polygons[polygon_with_label(from_color, i)].symbol;
      assign_leftmost(vertex_of_symbol.at(beta)[u - 1], u, i);
    }
    if (i < n) {
      const int beta = t.polygons[polygon_with_label(2, i)].symbol;
      assign_leftmost(vertex_of_symbol.at(beta)[0], 1, i + 1);
    }
  }

  // Per symbol, the recovered labels give g = 1-color label and sigma_u(g).
  // A polygon covering color u carries the u-color label of its symbol.
  std::map<int, std::vector<int>> symbol_labels;  // symbol -> [color-1] -> label
  for (auto& [s, per_color] : vertex_of_symbol) symbol_labels[s].assign(r, 0);
  for (int pid = 0; pid < np; ++pid) {
    const TreePolygon& p = t.polygons[pid];
    auto& sl = symbol_labels[p.symbol];
    int c = t.vertices[p.attach].color;
    for (int k = 0; k < p.arity; ++k, c = c % r + 1) {
      if (labels[pid][c - 1] == 0) throw TreeError("inverse: polygon corner left unlabeled");
      sl[c - 1] = labels[pid][c - 1];
    }
  }
  std::vector<std::vector<int>> sigma_images(r, std::vector<int>(n, 0));
  for (auto& [s, sl] : symbol_labels) {
    const int g = sl[0];
    if (g < 1 || g > n) throw TreeError("inverse: bad 1-color label");
    for (int u = 1; u <= r; ++u) {
      if (sigma_images[u - 1][g - 1] != 0) throw TreeError("inverse: duplicate 1-color label");
      sigma_images[u - 1][g - 1] = sl[u - 1];
    }
  }
  std::vector<Permutation> sigma;
  try {
    for (int u = 1; u <= r; ++u) sigma.emplace_back(sigma_images[u - 1]);
  } catch (const std::invalid_argument&) {
    throw TreeError("inverse: recovered labels are not permutations");
  }

  PartitionedCactus pc;
  pc.cactus.n = n;
  pc.cactus.alphas.assign(r, Permutation::identity(n));
  pc.cactus.alphas[r - 1] = sigma[r - 1].inverse();
  for (int u = 2; u <= r - 1; ++u)
    pc.cactus.alphas[u - 1] = compose(sigma[u - 1].inverse(), sigma[u]);
  pc.cactus.alphas[0] = compose(Permutation::long_cycle(n), sigma[1]);
  if (!pc.cactus.product_is_long_cycle())
    throw TreeError("inverse: recovered factors do not multiply to the long cycle");

  // Blocks of pi_u: one per color-u vertex, pulled back through sigma_u.
  for (int u = 1; u <= r; ++u) {
    const Permutation inv = sigma[u - 1].inverse();
    std::vector<std::vector<int>> blocks;
    for (int v = 0; v < nv; ++v) {
      if (t.vertices[v].color != u) continue;
      std::vector<int> block;
      for (int pid : incident[v]) block.push_back(inv(labels[pid][u - 1]));
      blocks.push_back(std::move(block));
    }
    try {
      pc.partitions.emplace_back(n, std::move(blocks));
    } catch (const std::invalid_argument& e) {
      throw TreeError(std::string("inverse: recovered blocks are not a partition: ") + e.what());
    }
    if (!is_stable(pc.partitions.back(), pc.cactus.alphas[u - 1]))
      throw TreeError("inverse: recovered partition is not stable");
  }
  return pc;
}

std::vector<CactusTree> enumerate_cactus_trees(const AVector& a) {
  const int r = a.r;
  const int n = a.total();
  if (r < 2) throw std::invalid_argument("enumerate_cactus_trees: r must be >= 2");
  if (n > 3) throw std::invalid_argument("enumerate_cactus_trees: hard guard n <= 3");
  std::vector<CactusTree> out;
  if (n < 1) return out;
  const std::vector<int> p = a.derived_p();
  for (int pl : p)
    if (pl < 1) return out;

  // Fixed skeleton: vertices color-major (root first), symbols in ascending
  // mask order, one polygon per (symbol, attach color).
  std::vector<int> color_offset(r + 1, 0);
  for (int c = 1; c <= r; ++c) color_offset[c] = color_offset[c - 1] + p[c - 1];
  const int nv = color_offset[r];
  auto vertex_id = [&](int color, int k) { return color_offset[color - 1] + k; };

  std::vector<unsigned> sym_mask;
  for (auto& [mask, cnt] : a.counts)
    for (int i = 0; i < cnt; ++i) sym_mask.push_back(mask);

  struct PolySkel {
    int symbol;
    int color;
    int arity;
  };
  std::vector<PolySkel> skel;
  std::vector<std::vector<std::pair<int, int>>> slots(r + 1);  // color -> (poly, k)
  for (int s = 1; s <= n; ++s)
    for (int c : subset_elements(sym_mask[s - 1], r)) {
      const int arity = cyclic_gap(sym_mask[s - 1], r, c);
      const int pid = static_cast<int>(skel.size());
      skel.push_back({s, c, arity});
      int col = c;
      for (int k = 0; k < arity - 1; ++k) {
        col = col % r + 1;
        slots[col].push_back({pid, k});
      }
    }
  const int np = static_cast<int>(skel.size());
  for (int c = 1; c <= r; ++c) {
    const int free_vertices = p[c - 1] - (c == 1 ? 1 : 0);
    if (static_cast<int>(slots[c].size()) != free_vertices)
      throw InternalCheckError("enumerate_cactus_trees: slot/vertex count mismatch");
  }

  // Descendant choice: per color, a bijection slots -> non-root vertices.
  std::vector<std::vector<int>> perm(r + 1);
  for (int c = 1; c <= r; ++c) {
    perm[c].resize(slots[c].size());
    for (size_t i = 0; i < perm[c].size(); ++i) perm[c][i] = static_cast<int>(i);
  }
  std::set<std::string> seen;

  auto try_assignment = [&](const std::vector<int>& attach_of) {
    CactusTree t;
    t.r = r;
    t.root = 0;
    t.vertices.resize(nv);
    for (int c = 1; c <= r; ++c)
      for (int k = 0; k < p[c - 1]; ++k) t.vertices[vertex_id(c, k)].color = c;
    t.polygons.resize(np);
    for (int pid = 0; pid < np; ++pid) {
      t.polygons[pid].arity = skel[pid].arity;
      t.polygons[pid].symbol = skel[pid].symbol;
      t.polygons[pid].attach = attach_of[pid];
      t.polygons[pid].descendants.assign(skel[pid].arity - 1, -1);
    }
    for (int c = 1; c <= r; ++c)
      for (size_t i = 0; i < slots[c].size(); ++i) {
        auto [pid, k] = slots[c][i];
        t.polygons[pid].descendants[k] = vertex_id(c, perm[c][i] + (c == 1 ? 1 : 0));
      }

    // reachability = tree
    std::vector<char> reached(nv, 0);
    std::vector<int> stack{0};
    reached[0] = 1;
    std::vector<std::vector<int>> attached(nv);
    for (int pid = 0; pid < np; ++pid) attached[t.polygons[pid].attach].push_back(pid);
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int pid : attached[v])
        for (int d : t.polygons[pid].descendants)
          if (!reached[d]) {
            reached[d] = 1;
            ++count;
            stack.push_back(d);
          }
    }
    if (count != nv) return;

    // enumerate children orders per vertex
    std::vector<std::vector<int>> order(nv);
    for (int v = 0; v < nv; ++v) order[v] = attached[v];
    std::function<void(int)> rec_order = [&](int v) {
      if (v == nv) {
        for (int w = 0; w < nv; ++w) t.vertices[w].children = order[w];
        if (validate_tree(t).empty() && seen.insert(t.canonical_key()).second) out.push_back(t);
        return;
      }
      std::sort(order[v].begin(), order[v].end());
      do {
        rec_order(v + 1);
      } while (std::next_permutation(order[v].begin(), order[v].end()));
    };
    rec_order(0);
  };

  // odometer over attach choices, inner odometer over per-color bijections
  std::function<void(int)> rec_perm = [&](int c) {
    if (c > r) {
      std::vector<int> attach_of(np);
      std::function<void(int)> rec_attach = [&](int pid) {
        if (pid == np) {
          try_assignment(attach_of);
          return;
        }
        const int col = skel[pid].color;
        for (int k = 0; k < p[col - 1]; ++k) {
          attach_of[pid] = vertex_id(col, k);
          rec_attach(pid + 1);
        }
      };
      rec_attach(0);
      return;
    }
    std::sort(perm[c].begin(), perm[c].end());
    do {
      rec_perm(c + 1);
    } while (std::next_permutation(perm[c].begin(), perm[c].end()));
  };
  rec_perm(1);
  return out;
}

}  // namespace cactus
