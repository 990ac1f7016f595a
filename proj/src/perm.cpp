#include "cactus/perm.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cactus {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("Permutation: not a bijection on {1..n}");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("Permutation: n must be >= 1");
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i + 1;
  return Permutation(std::move(im));
}

Permutation Permutation::long_cycle(int n) {
  if (n < 1) throw std::invalid_argument("Permutation: n must be >= 1");
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i + 2;
  im[n - 1] = 1;
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  if (n < 1) throw std::invalid_argument("Permutation: n must be >= 1");
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = i + 1;
  std::vector<char> used(n + 1, 0);
  for (const auto& c : cycles) {
    for (size_t k = 0; k < c.size(); ++k) {
      int x = c[k];
      if (x < 1 || x > n || used[x]) throw std::invalid_argument("from_cycles: invalid or repeated element");
      used[x] = 1;
      im[x - 1] = c[(k + 1) % c.size()];
    }
  }
  return Permutation(std::move(im));
}

int Permutation::operator()(int x) const {
  if (x < 1 || x > size()) throw std::out_of_range("Permutation: point out of range");
  return images_[x - 1];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(size());
  for (int i = 1; i <= size(); ++i) inv[images_[i - 1] - 1] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  std::vector<std::vector<int>> out;
  for (int x = 1; x <= n; ++x) {
    if (seen[x]) continue;
    std::vector<int> c;
    int y = x;
    do {
      seen[y] = 1;
      c.push_back(y);
      y = images_[y - 1];
    } while (y != x);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

int Permutation::num_cycles() const { return static_cast<int>(cycles().size()); }

bool Permutation::next_lex() { return std::next_permutation(images_.begin(), images_.end()); }

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.size() != t.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> im(s.size());
  for (int x = 1; x <= t.size(); ++x) im[x - 1] = s(t(x));
  return Permutation(std::move(im));
}

}  // namespace cactus
