#pragma once

#include <vector>

#include "yy/laurent.hpp"
#include "yy/liedata.hpp"

namespace yy {

// Sparse endomorphism of V ⊗ V over the Laurent ring. Basis pairs are
// order-indexed and flattened as a*dim + b; rows list the image of each
// basis pair, sorted by target index. Every stored coefficient is nonzero,
// and every entry satisfies the weight conservation law
// lambda^a + lambda^b = lambda^c + lambda^d.
struct RMatrix {
  LieType type{Family::A, 1};
  int dim = 0;
  std::vector<std::vector<std::pair<int, Laurent>>> rows;

  const Laurent* entry(int src, int dst) const;
  const Laurent* entry(int a, int b, int c, int d) const { return entry(a * dim + b, c * dim + d); }
  friend bool operator==(const RMatrix& x, const RMatrix& y) {
    return x.dim == y.dim && x.rows == y.rows;
  }
};

// Wall-crossing monodromy matrix B_YY on V_{omega1} ⊗ V_{omega1}.
RMatrix build_monodromy(const LieType& type);

// Exact check of (R⊗1)(1⊗R)(R⊗1) = (1⊗R)(R⊗1)(1⊗R) on V^⊗3.
bool verify_yang_baxter(const RMatrix& R);

// Monic minimal polynomial, coefficients ascending (c_0, ..., c_{k-1}, 1).
// Searches exact linear dependence among I, R, R^2, R^3 and throws
// std::runtime_error if none exists through degree 3.
std::vector<Laurent> minimal_polynomial(const RMatrix& R);

// Exact inverse through the minimal polynomial; requires a unit-monomial
// constant term (which minimal_polynomial guarantees for these matrices).
RMatrix rmatrix_inverse(const RMatrix& R);

// Creation/annihilation data of the symmetry-breaking transformation S.
// creation[a] = e^{a, partner[a]}; annihilation[a] = M_{a, partner[a]}
// (a formal fraction: the B_n middle entry is 1 over a binomial). eta is
// the diagonal of the quantum-trace weight matrix, always unit monomials.
struct PairingData {
  LieType type{Family::A, 1};
  int dim = 0;
  std::vector<int> partner;
  std::vector<Laurent> creation;
  std::vector<LaurentFrac> annihilation;
  std::vector<Laurent> eta;
  Laurent twist;    // d with B_YY J = d J, signed monomial
  Laurent unknot;   // sum of eta entries, the 1-strand quantum trace
};

// Throws std::invalid_argument("pairing not invertible") for A_n, n >= 2.
PairingData build_pairing(const LieType& type);

// d = (-1)^m q^{-(1/2)[(w1,w1) - 2(w1,s) + x]} where the sum s and the
// pairwise inner-product sum x run over the root multiset of the lowest
// singular weight and m is the multiset size.
Laurent twist_eigenvalue(const LieType& type);

// Eigenvector identity sum_{a,b} e^{a,b} B_{a,b}^{c,d} = d e^{c,d}, exactly.
bool verify_pairing_eigenvector(const LieType& type);
bool verify_pairing_eigenvector(const RMatrix& R, const PairingData& p);

// Diagonal similarity Q as formal fractions over basis pairs (a*dim+b).
// Identity off the antidiagonal sector; the B_n middle entry is
// (-1)^n / (q^{1/4} + q^{-1/4}).
std::vector<LaurentFrac> build_Q(const LieType& type);

// Re-indexed summary tables used as cross-checks against the assembled
// matrix where both define an entry. Returns the summary value of the
// antidiagonal entry with source (pa, a), target (pb, b) given order
// indices a, b, or nullptr-equivalent (zero Laurent + false) if the
// summary does not define it.
struct SummaryEntry { bool defined = false; Laurent value; };
SummaryEntry summary_entry(const LieType& type, int a, int b);

}  // namespace yy
