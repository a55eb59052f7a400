#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "yy/rational.hpp"

namespace yy {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial in a formal q with exact rational exponents and
// arbitrary-precision integer coefficients. Terms are kept sorted by
// ascending exponent with no zero coefficients, so equality and hashing
// are structural.
class Laurent {
 public:
  struct Term {
    Rational exp;
    BigInt coeff;
    friend bool operator==(const Term& a, const Term& b) {
      return a.exp == b.exp && a.coeff == b.coeff;
    }
  };

  Laurent() = default;

  static Laurent zero() { return Laurent(); }
  static Laurent one() { return monomial(Rational(0), 1); }
  static Laurent monomial(const Rational& e, BigInt c);
  static Laurent integer(long long v) { return monomial(Rational(0), BigInt(v)); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // true for +-q^e, the units of the ring
  bool is_unit_monomial() const {
    return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;
  Laurent& operator+=(const Laurent& b) { *this = *this + b; return *this; }
  Laurent& operator*=(const Laurent& b) { *this = *this * b; return *this; }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  // Inverse of a unit monomial; throws std::domain_error otherwise.
  Laurent unit_inverse() const;
  // Integer power; negative powers require a unit monomial.
  Laurent pow(long long k) const;

  // Sum of coeff * q_value^exp over terms, principal branch for rational
  // powers. Rejects q_value = 0.
  std::complex<double> eval(std::complex<double> q_value) const;

  std::string str() const;  // human-readable, for diagnostics

  // Raw constructor from sorted, deduplicated, zero-free terms.
  static Laurent from_sorted_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
};

// Exact quotient a / b; nullopt when b is zero or does not divide a.
std::optional<Laurent> divide_exact(const Laurent& a, const Laurent& b);

// Formal fraction of ring elements. Denominator folds into the numerator
// whenever the division is exact, so `den` is one except for genuinely
// fractional values (the B_n annihilation middle entry, Q's middle entry).
struct LaurentFrac {
  Laurent num;
  Laurent den = Laurent::one();

  bool is_polynomial() const { return den == Laurent::one(); }
  friend bool operator==(const LaurentFrac& a, const LaurentFrac& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend bool operator!=(const LaurentFrac& a, const LaurentFrac& b) { return !(a == b); }
  friend LaurentFrac operator*(const LaurentFrac& a, const LaurentFrac& b);
  friend LaurentFrac operator+(const LaurentFrac& a, const LaurentFrac& b);
  friend LaurentFrac operator-(const LaurentFrac& a, const LaurentFrac& b);
};

LaurentFrac make_frac(Laurent num, Laurent den);

}  // namespace yy
