#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "yy/monodromy.hpp"

namespace yy {

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // sign = crossing sign, |letter| in 1..strands-1
};

// Tokens s<k>, s<k>^-1 (sigma<k> also accepted), whitespace separated.
// Without a hint the strand count is max index + 1 (at least 1).
BraidWord parse_braid(const std::string& text, std::optional<int> strands_hint = std::nullopt);

int writhe(const BraidWord& beta);

// Sparse linear operator on the dim^strands basis of weight-index tuples.
// columns[i] is the image of basis vector i, sorted by target index.
struct TensorOperator {
  int strands = 1;
  int dim = 0;
  std::vector<std::vector<std::pair<std::uint32_t, Laurent>>> columns;
};

// Braid group representation: a positive letter acts by R^{-1} on its two
// slots, a negative letter by R (convention frozen by the Markov
// stabilization requirement; see knot_invariant).
TensorOperator represent(const RMatrix& R, const BraidWord& beta);

// Diagonal of the quantum-trace weight matrix.
std::vector<Laurent> eta_matrix(const PairingData& p);

// Tr_q T = sum_I <I|T|I> eta_{i_1} ... eta_{i_m}.
Laurent quantum_trace(const TensorOperator& T, const PairingData& p);

struct KnotInvariant {
  int writhe = 0;
  Laurent framed_trace;       // Tr_q of the represented word
  Laurent unknot_value;       // 1-strand trace U
  LaurentFrac normalized;     // d^{-w} Tr_q / U, reduced when division is exact
};

// Holds the R-matrix, its inverse and the pairing of one type so repeated
// braid evaluations share the construction.
class InvariantEngine {
 public:
  explicit InvariantEngine(const LieType& type);
  KnotInvariant eval(const BraidWord& beta) const;
  const RMatrix& rmatrix() const { return R_; }
  const RMatrix& rmatrix_inv() const { return Rinv_; }
  const PairingData& pairing() const { return pairing_; }

 private:
  RMatrix R_, Rinv_;
  PairingData pairing_;
};

// Markov-normalized invariant of the braid closure. Throws for A_n, n >= 2.
KnotInvariant knot_invariant(const LieType& type, const BraidWord& beta);

// Randomized Markov-move trials: for each sample draws a word (strands <= 4,
// length <= 8), and checks the normalized invariant is unchanged by a random
// cyclic conjugation and by stabilization with sigma_m^{+1} and sigma_m^{-1}.
// Returns human-readable descriptions of any failures.
std::vector<std::string> markov_trials(const LieType& type, int samples, unsigned seed);

}  // namespace yy
