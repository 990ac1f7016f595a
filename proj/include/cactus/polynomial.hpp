#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cactus {

// Multivariate polynomial with exact coefficients, keyed by exponent vectors
// of fixed length. Zero coefficients are never stored.
template <class C>
class SparsePolynomial {
 public:
  using Terms = std::map<std::vector<int>, C>;

  explicit SparsePolynomial(int nvars = 0) : nvars_(nvars) {}

  static SparsePolynomial constant(int nvars, const C& c) {
    SparsePolynomial p(nvars);
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
  }
  static SparsePolynomial variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("variable: index out of range");
    SparsePolynomial p(nvars);
    std::vector<int> e(nvars, 0);
    e[index] = 1;
    p.add_term(e, C(1));
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }

  void add_term(const std::vector<int>& exps, const C& c) {
    if (static_cast<int>(exps.size()) != nvars_)
      throw std::invalid_argument("add_term: exponent arity mismatch");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      if (!(c == C(0))) terms_.emplace(exps, c);
    } else {
      it->second += c;
      if (it->second == C(0)) terms_.erase(it);
    }
  }

  C coefficient(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? C(0) : it->second;
  }

  friend SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b) {
    check_arity(a, b);
    SparsePolynomial r = a;
    for (auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b) {
    check_arity(a, b);
    SparsePolynomial r = a;
    for (auto& [e, c] : b.terms_) r.add_term(e, C(0) - c);
    return r;
  }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    check_arity(a, b);
    SparsePolynomial r(a.nvars_);
    std::vector<int> e(a.nvars_);
    for (auto& [ea, ca] : a.terms_)
      for (auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  SparsePolynomial pow(int k) const {
    if (k < 0) throw std::invalid_argument("pow: negative exponent");
    SparsePolynomial r = constant(nvars_, C(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
      if (!first) os << " + ";
      os << c;
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        os << " x" << i + 1;
        if (e[i] > 1) os << "^" << e[i];
      }
      first = false;
    }
    return os.str();
  }

 private:
  static void check_arity(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  }

  int nvars_;
  Terms terms_;
};

}  // namespace cactus
