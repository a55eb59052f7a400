#pragma once

// Independent skein-relation Jones oracle for braid closures, used to
// cross-check the quantum-trace invariant. Standard Kauffman bracket
// conventions: a positive crossing resolves as A * identity + A^{-1} * cup-cap,
// the closure value is (-A^3)^{-w} <K> with t = A^{-4}. Loop counting walks
// Temperley-Lieb diagrams with union-find.

#include <vector>

#include "yy/braid.hpp"
#include "yy/laurent.hpp"

namespace yy::testing {

namespace detail {

class LoopCounter {
 public:
  explicit LoopCounter(int strands) {
    cur_.resize(strands);
    for (int i = 0; i < strands; ++i) cur_[i] = fresh();
    left_ = cur_;
  }
  // smoothing that caps strands k-1,k and opens a new cup there (1-based k)
  void cupcap(int k) {
    if (unite(cur_[k - 1], cur_[k])) ++loops_;
    int a = fresh(), b = fresh();
    unite(a, b);
    cur_[k - 1] = a;
    cur_[k] = b;
  }
  int close() {
    for (size_t i = 0; i < cur_.size(); ++i)
      if (unite(cur_[i], left_[i])) ++loops_;
    return loops_;
  }

 private:
  int fresh() {
    parent_.push_back(int(parent_.size()));
    return int(parent_.size()) - 1;
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a); b = find(b);
    if (a == b) return true;
    parent_[a] = b;
    return false;
  }
  std::vector<int> parent_, cur_, left_;
  int loops_ = 0;
};

}  // namespace detail

// Kauffman bracket of the braid closure, Laurent in A.
inline Laurent kauffman_bracket(const BraidWord& beta) {
  const int cr = int(beta.letters.size());
  Laurent total;
  const Laurent delta = -(Laurent::monomial(Rational(2), 1) + Laurent::monomial(Rational(-2), 1));
  for (unsigned mask = 0; mask < (1u << cr); ++mask) {
    detail::LoopCounter lc(beta.strands);
    long long apow = 0;
    for (int idx = 0; idx < cr; ++idx) {
      int letter = beta.letters[idx];
      bool smooth_cup = (mask >> idx) & 1;
      if (letter > 0) apow += smooth_cup ? -1 : 1;
      else apow += smooth_cup ? 1 : -1;
      if (smooth_cup) lc.cupcap(std::abs(letter));
    }
    int loops = lc.close();
    Laurent term = Laurent::monomial(Rational(apow), 1);
    for (int i = 1; i < loops; ++i) term = term * delta;
    total += term;
  }
  return total;
}

// Jones polynomial of the closure in t (half-integer exponents for links).
inline Laurent jones_polynomial(const BraidWord& beta) {
  Laurent br = kauffman_bracket(beta);
  int w = writhe(beta);
  Laurent pref = Laurent::monomial(Rational(-3LL * w), (w % 2 == 0) ? 1 : -1);
  Laurent in_A = pref * br;
  std::vector<Laurent::Term> out;
  for (const auto& t : in_A.terms()) out.push_back({t.exp * Rational(-1, 4), t.coeff});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.exp < y.exp; });
  return Laurent::from_sorted_terms(std::move(out));
}

inline BraidWord mirror(const BraidWord& beta) {
  BraidWord m = beta;
  for (int& l : m.letters) l = -l;
  return m;
}

// a == s * b for a unit monomial s; reports s through *unit when non-null.
inline bool equal_up_to_unit(const Laurent& a, const Laurent& b, Laurent* unit = nullptr) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const auto& ta = a.terms().front();
  const auto& tb = b.terms().front();
  if (ta.coeff != tb.coeff && ta.coeff != -tb.coeff) return false;
  Laurent s = Laurent::monomial(ta.exp - tb.exp, ta.coeff == tb.coeff ? 1 : -1);
  if (a != s * b) return false;
  if (unit) *unit = s;
  return true;
}

}  // namespace yy::testing
