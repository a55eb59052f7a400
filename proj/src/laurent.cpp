#include "yy/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace yy {

Laurent Laurent::monomial(const Rational& e, BigInt c) {
  Laurent r;
  if (c != 0) r.terms_.push_back({e, std::move(c)});
  return r;
}

Laurent Laurent::from_sorted_terms(std::vector<Term> terms) {
  Laurent r;
  r.terms_ = std::move(terms);
  return r;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_[0].exp == Rational(0) && terms_[0].coeff == 1;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  Laurent r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() && ib != b.terms_.end()) {
    if (ia->exp < ib->exp) {
      r.terms_.push_back(*ia++);
    } else if (ib->exp < ia->exp) {
      r.terms_.push_back(*ib++);
    } else {
      BigInt c = ia->coeff + ib->coeff;
      if (c != 0) r.terms_.push_back({ia->exp, std::move(c)});
      ++ia; ++ib;
    }
  }
  r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
  r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.exp, -t.coeff});
  return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return Laurent::zero();
  // monomial fast paths dominate in the braid evaluation loops
  if (a.terms_.size() == 1) {
    Laurent r;
    r.terms_.reserve(b.terms_.size());
    for (const auto& t : b.terms_) r.terms_.push_back({a.terms_[0].exp + t.exp, a.terms_[0].coeff * t.coeff});
    return r;
  }
  if (b.terms_.size() == 1) {
    Laurent r;
    r.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) r.terms_.push_back({t.exp + b.terms_[0].exp, t.coeff * b.terms_[0].coeff});
    return r;
  }
  std::vector<Laurent::Term> buf;
  buf.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) buf.push_back({ta.exp + tb.exp, ta.coeff * tb.coeff});
  std::sort(buf.begin(), buf.end(), [](const auto& x, const auto& y) { return x.exp < y.exp; });
  Laurent r;
  r.terms_.reserve(buf.size());
  for (auto& t : buf) {
    if (!r.terms_.empty() && r.terms_.back().exp == t.exp) {
      r.terms_.back().coeff += t.coeff;
      if (r.terms_.back().coeff == 0) r.terms_.pop_back();
    } else {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

Laurent Laurent::unit_inverse() const {
  if (!is_unit_monomial()) throw std::domain_error("not a unit monomial: " + str());
  return monomial(-terms_[0].exp, terms_[0].coeff);
}

Laurent Laurent::pow(long long k) const {
  if (k == 0) return one();
  Laurent base = *this;
  if (k < 0) {
    base = unit_inverse();
    k = -k;
  }
  Laurent acc = one();
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::complex<double> Laurent::eval(std::complex<double> q_value) const {
  if (q_value == std::complex<double>(0.0, 0.0))
    throw std::domain_error("laurent evaluation at q = 0");
  std::complex<double> acc(0.0, 0.0);
  for (const auto& t : terms_) {
    std::complex<double> p = std::pow(q_value, std::complex<double>(t.exp.to_double(), 0.0));
    acc += p * t.coeff.convert_to<double>();
  }
  return acc;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << t.coeff.str();
    if (!t.exp.is_zero()) os << "*q^(" << t.exp.str() << ")";
  }
  return os.str();
}

std::optional<Laurent> divide_exact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Laurent::zero();
  Laurent rem = a;
  std::vector<Laurent::Term> qt;
  const auto& lead = b.terms().front();  // lowest exponent of the divisor
  // bounded by term growth; cancellation makes this a straight long division
  for (int guard = 0; !rem.is_zero(); ++guard) {
    if (guard > 4096) return std::nullopt;
    const auto& rlead = rem.terms().front();
    if (rlead.coeff % lead.coeff != 0) return std::nullopt;
    Laurent::Term f{rlead.exp - lead.exp, rlead.coeff / lead.coeff};
    rem = rem - Laurent::monomial(f.exp, f.coeff) * b;
    qt.push_back(std::move(f));
  }
  std::sort(qt.begin(), qt.end(), [](const auto& x, const auto& y) { return x.exp < y.exp; });
  return Laurent::from_sorted_terms(std::move(qt));
}

LaurentFrac make_frac(Laurent num, Laurent den) {
  if (den.is_zero()) throw std::domain_error("fraction with zero denominator");
  if (auto q = divide_exact(num, den)) return LaurentFrac{*q, Laurent::one()};
  return LaurentFrac{std::move(num), std::move(den)};
}

LaurentFrac operator*(const LaurentFrac& a, const LaurentFrac& b) {
  return make_frac(a.num * b.num, a.den * b.den);
}

LaurentFrac operator+(const LaurentFrac& a, const LaurentFrac& b) {
  return make_frac(a.num * b.den + b.num * a.den, a.den * b.den);
}

LaurentFrac operator-(const LaurentFrac& a, const LaurentFrac& b) {
  return make_frac(a.num * b.den - b.num * a.den, a.den * b.den);
}

}  // namespace yy
