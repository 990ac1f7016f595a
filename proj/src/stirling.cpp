#include "cactus/stirling.hpp"

#include <algorithm>
#include <stdexcept>

namespace cactus {

Int stirling2(int q, int p) {
  if (q < 0 || p < 0) throw std::invalid_argument("stirling2: negative argument");
  if (p > q) return 0;
  if (q == 0) return 1;  // p == 0 here
  if (p == 0) return 0;
  // row recurrence: S(q, p) = p S(q-1, p) + S(q-1, p-1)
  std::vector<Int> row(q + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= q; ++i) {
    for (int j = i; j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;  // S(i, 0) = 0 once i >= 1
  }
  return row[p];
}

Int stirling1_signed(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("stirling1_signed: negative argument");
  if (q > p) return 0;
  if (p == 0) return 1;
  // s(p, q) = s(p-1, q-1) - (p-1) s(p-1, q)
  std::vector<Int> row(p + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= p; ++i) {
    for (int j = i; j >= 1; --j) row[j] = row[j - 1] - (i - 1) * row[j];
    row[0] = -(i - 1) * row[0];
  }
  return row[q];
}

Int bell(int m) {
  if (m < 0) throw std::invalid_argument("bell: negative argument");
  Int b = 0;
  for (int p = 0; p <= m; ++p) b += stirling2(m, p);
  return b;
}

static void partitions_rec(int rem, int max_part, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
  if (rem == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(rem, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(rem - k, k, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative argument");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

}  // namespace cactus
