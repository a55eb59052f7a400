#pragma once

#include <string>
#include <vector>

#include "yy/rational.hpp"

namespace yy {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

Family family_from_char(char c);

struct LieType {
  Family family;
  int rank;

  std::string str() const { return std::string(1, char(family)) + std::to_string(rank); }
};

// Validated rank bounds: A >= 1, B >= 2, C >= 2, D >= 3.
void validate(const LieType& type);

int dim_fundamental(const LieType& type);

// Index into the weight list of V_{omega1}. D_n carries a doubled middle
// level n-1 / n-1'; everywhere else `primed` is false.
struct WeightIndex {
  int slot = 0;
  bool primed = false;
  friend bool operator==(const WeightIndex&, const WeightIndex&) = default;
};

// Static weight/root data of one (family, rank), in an orthogonal-basis
// realization whose inner products reproduce the tables the construction
// rests on. Internally everything is indexed by the total order o.
class WeightTable {
 public:
  static WeightTable make(const LieType& type);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }
  int dim() const { return int(weights_.size()); }

  // order position <-> weight index
  int order(const WeightIndex& idx) const;
  WeightIndex index_of(int order_pos) const;

  // all inner products below use order positions / 1-based root numbers
  Rational weight_ip(int o1, int o2) const { return dot(weights_[o1], weights_[o2]); }
  Rational root_ip(int i, int k) const { return dot(roots_[i - 1], roots_[k - 1]); }
  Rational weight_root_ip(int o, int i) const { return dot(weights_[o], roots_[i - 1]); }
  // (rho, alpha_i) = (alpha_i, alpha_i)/2
  Rational rho_root_ip(int i) const { return root_ip(i, i) * half(); }
  // (omega1, alpha_i); omega1 is the highest weight, order position 0
  Rational omega1_root_ip(int i) const { return weight_root_ip(0, i); }
  Rational omega1_norm() const { return weight_ip(0, 0); }

  const std::vector<Rational>& weight(int o) const { return weights_[o]; }
  const std::vector<Rational>& root(int i) const { return roots_[i - 1]; }
  Rational gram_scale() const { return gram_; }

  // order-sum value of the antidiagonal (zero weight sum) sector; -1 for A
  int antidiagonal_order_sum() const;

 private:
  Rational dot(const std::vector<Rational>& u, const std::vector<Rational>& v) const;

  LieType type_{Family::A, 1};
  Rational gram_ = Rational(1);
  std::vector<std::vector<Rational>> weights_;  // by order position
  std::vector<std::vector<Rational>> roots_;    // alpha_1..alpha_n
};

// Free-function query helpers.
int order(const LieType& type, const WeightIndex& idx);
Rational inner_product_weights(const LieType& type, const WeightIndex& s, const WeightIndex& t);

struct RootData {
  std::vector<std::vector<Rational>> roots;
  std::vector<Rational> rho_pairings;                // (rho, alpha_i)
  std::vector<std::vector<Rational>> root_gram;      // (alpha_i, alpha_k)
};
RootData root_data(const LieType& type);

}  // namespace yy
