#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <vector>

namespace cactus {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Table of exact counts keyed by an integer vector (a p-vector of block
// counts or a q-vector of cycle counts). Absent keys mean zero.
using CountTable = std::map<std::vector<int>, Int>;

inline Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int b = 1;
  for (int i = 0; i < k; ++i) {
    b *= n - i;
    b /= i + 1;  // exact: product of i+1 consecutive integers
  }
  return b;
}

inline Int pow_int(Int base, int exp) {
  if (exp < 0) throw std::invalid_argument("pow_int: negative exponent");
  Int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// binom(n; k_1,...,k_m) with sum(k) == n required.
inline Int multinomial(int n, const std::vector<int>& parts) {
  long long sum = 0;
  for (int k : parts) {
    if (k < 0) throw std::invalid_argument("multinomial: negative part");
    sum += k;
  }
  if (sum != n) throw std::invalid_argument("multinomial: parts do not sum to n");
  Int r = factorial(n);
  for (int k : parts) r /= factorial(k);
  return r;
}

// Exact division helper: throws if b does not divide a.
inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("exact_div: zero divisor");
  Int q = a / b;
  if (q * b != a) throw std::runtime_error("exact_div: non-integral quotient");
  return q;
}

}  // namespace cactus
