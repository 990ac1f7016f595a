#include "cactus/avector.hpp"

#include <algorithm>
#include <sstream>

namespace cactus {

std::string subset_label(unsigned mask, int r) {
  std::ostringstream os;
  bool first = true;
  for (int l : subset_elements(mask, r)) {
    if (!first) os << ',';
    os << l;
    first = false;
  }
  return os.str();
}

unsigned subset_from_label(const std::string& label, int r) {
  std::vector<int> elems;
  std::istringstream is(label);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("subset_from_label: empty element");
    elems.push_back(std::stoi(tok));
  }
  if (elems.empty()) throw std::invalid_argument("subset_from_label: empty subset");
  return subset_mask(elems, r);
}

int cyclic_gap(unsigned mask, int r, int i) {
  if (!subset_contains(mask, i)) throw std::invalid_argument("cyclic_gap: i not in t");
  for (int g = 1; g < r; ++g) {
    int next = (i - 1 + g) % r + 1;
    if (subset_contains(mask, next)) return g;
  }
  return r;  // singleton wraps around
}

std::vector<int> AVector::derived_p() const {
  std::vector<int> p(r, 0);
  p[0] = 1;
  for (auto& [mask, a] : counts)
    for (int l = 1; l <= r; ++l)
      if (!subset_contains(mask, l)) p[l - 1] += a;
  return p;
}

static void enumerate_rec(int r, unsigned mask, unsigned last_mask, int rem_total,
                          std::vector<int>& rem_target, AVector& cur,
                          std::vector<AVector>& out) {
  if (mask > last_mask) {
    if (rem_total == 0 &&
        std::all_of(rem_target.begin(), rem_target.end(), [](int v) { return v == 0; }))
      out.push_back(cur);
    return;
  }
  int cap = rem_total;
  for (int l = 1; l <= r; ++l)
    if (!subset_contains(mask, l)) cap = std::min(cap, rem_target[l - 1]);
  for (int a = 0; a <= cap; ++a) {
    if (a > 0) {
      cur.counts[mask] = a;
      for (int l = 1; l <= r; ++l)
        if (!subset_contains(mask, l)) rem_target[l - 1] -= a;
    }
    enumerate_rec(r, mask + 1, last_mask, rem_total - a, rem_target, cur, out);
    if (a > 0) {
      for (int l = 1; l <= r; ++l)
        if (!subset_contains(mask, l)) rem_target[l - 1] += a;
    }
  }
  cur.counts.erase(mask);
}

std::vector<AVector> enumerate_avectors_with_targets(int r, int total,
                                                     const std::vector<int>& target) {
  if (r < 1 || r > 20) throw std::invalid_argument("enumerate_avectors: r out of range");
  if (static_cast<int>(target.size()) != r)
    throw std::invalid_argument("enumerate_avectors: target size != r");
  std::vector<AVector> out;
  if (total < 0) return out;
  for (int v : target)
    if (v < 0) return out;
  AVector cur;
  cur.r = r;
  std::vector<int> rem = target;
  const unsigned last_mask = (1u << r) - 1;
  enumerate_rec(r, 1, last_mask, total, rem, cur, out);
  return out;
}

std::vector<AVector> enumerate_avectors(int n, int r, const std::vector<int>& p) {
  if (static_cast<int>(p.size()) != r)
    throw std::invalid_argument("enumerate_avectors: p size != r");
  std::vector<int> target(p.begin(), p.end());
  target[0] -= 1;
  return enumerate_avectors_with_targets(r, n, target);
}

static void by_total_rec(int r, unsigned mask, unsigned last_mask, int rem, AVector& cur,
                         std::vector<AVector>& out) {
  if (mask > last_mask) {
    if (rem == 0) out.push_back(cur);
    return;
  }
  for (int a = 0; a <= rem; ++a) {
    if (a > 0) cur.counts[mask] = a;
    by_total_rec(r, mask + 1, last_mask, rem - a, cur, out);
  }
  cur.counts.erase(mask);
}

std::vector<AVector> enumerate_avectors_by_total(int r, int total) {
  if (r < 1 || r > 20) throw std::invalid_argument("enumerate_avectors_by_total: r out of range");
  std::vector<AVector> out;
  if (total < 0) return out;
  AVector cur;
  cur.r = r;
  by_total_rec(r, 1, (1u << r) - 1, total, cur, out);
  return out;
}

}  // namespace cactus
