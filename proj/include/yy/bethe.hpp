#pragma once

#include <complex>
#include <string>
#include <vector>

#include "yy/liedata.hpp"

namespace yy {

using Complex = std::complex<double>;

// Weight-index label for a one-point sector: the count l, with the primed
// variant for D_n's l = n-1'.
struct LValue {
  int value = 0;
  bool primed = false;
  std::string str() const { return std::to_string(value) + (primed ? "p" : ""); }
};

// Instance of the critical system: simple-root labels (1-based) attached to
// each w coordinate, marked points z (all carrying omega1), and the
// symmetry-breaking constant c.
struct CriticalConfig {
  LieType type{Family::A, 1};
  std::vector<int> root_labels;
  std::vector<Complex> z;
  double c = 0.0;
};

// Root label sequence of the one-point sector l (the i_j assignment).
std::vector<int> one_point_labels(const LieType& type, const LValue& l);
// Root multiset of the lowest two-point sector (Eq-89 content).
std::vector<int> two_point_labels(const LieType& type);

CriticalConfig one_point_config(const LieType& type, const LValue& l, double c, Complex z);
CriticalConfig two_point_config(const LieType& type, Complex z1, Complex z2, double c);

// Component j of the critical system:
//   sum_a (alpha_{i_j}, omega1)/(w_j - z_a)
//     - sum_{s != j} (alpha_{i_j}, alpha_{i_s})/(w_j - w_s) - c (rho, alpha_{i_j}).
// Throws std::domain_error on a coincidence with a nonzero pairing.
std::vector<Complex> yy_gradient(const CriticalConfig& cfg, const std::vector<Complex>& w);

// max_j |gradient_j| / max(1, largest single term modulus)
double relative_residual(const CriticalConfig& cfg, const std::vector<Complex>& w);

// Diagnostic only: the multivalued potential W evaluated with principal
// branch logarithms.
Complex yy_value(const CriticalConfig& cfg, const std::vector<Complex>& w);

struct CriticalSolution {
  std::vector<Complex> coords;
  double residual = 0.0;   // recomputed relative residual, never trusted
  std::string meta;
};

// Closed-form one-point critical point at z with the given c > 0; residual
// is recomputed and must come out < 1e-9 or the constructor throws.
CriticalSolution closed_form_one_point(const LieType& type, const LValue& l, double c, Complex z);

// Closed-form two-point c = 0 critical point of the lowest sector.
CriticalSolution closed_form_two_point_c0(const LieType& type, Complex z1, Complex z2);

// Newton iteration on the critical system; stops at relative residual
// < 1e-12 or 100 iterations. Throws std::runtime_error on a singular
// Jacobian or divergence.
CriticalSolution newton_refine(const CriticalConfig& cfg, const std::vector<Complex>& w0);

// Strict ordering claims of the one-point solutions (z = 0, real c > 0).
bool verify_ordering(const LieType& type, const LValue& l, const CriticalSolution& sol);

// Continuation in c over {1, 10, 100, 1000} from the two-point c = 0
// solution; checks every coordinate's distance to {z1, z2} decreases and
// shrinks as O(1/c) (final decade ratio within a factor 3 of 10). The
// explicit-l overload validates l against the lowest two-point sector, the
// only one with a closed-form seed.
bool verify_c_limit(const LieType& type, Complex z1, Complex z2);
bool verify_c_limit(const LieType& type, int l, Complex z1, Complex z2);

// Structural check for two-point c = 0 solutions: pair sums and midpoints.
bool verify_two_point_structure(const LieType& type, Complex z1, Complex z2,
                                const CriticalSolution& sol);

}  // namespace yy
