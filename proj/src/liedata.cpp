#include "yy/liedata.hpp"

#include <stdexcept>

namespace yy {

Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
  }
  throw std::invalid_argument(std::string("unknown family: ") + c);
}

void validate(const LieType& type) {
  int n = type.rank;
  switch (type.family) {
    case Family::A: if (n >= 1) return; break;
    case Family::B: if (n >= 2) return; break;
    case Family::C: if (n >= 2) return; break;
    case Family::D: if (n >= 3) return; break;
  }
  throw std::invalid_argument("unsupported rank for " + type.str());
}

int dim_fundamental(const LieType& type) {
  validate(type);
  switch (type.family) {
    case Family::A: return type.rank + 1;
    case Family::B: return 2 * type.rank + 1;
    default: return 2 * type.rank;
  }
}

namespace {

std::vector<Rational> basis_vec(int len, int i, long long v = 1) {
  std::vector<Rational> e(len, Rational(0));
  e[i] = Rational(v);
  return e;
}

std::vector<Rational> negate(std::vector<Rational> v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

WeightTable WeightTable::make(const LieType& type) {
  validate(type);
  WeightTable t;
  t.type_ = type;
  int n = type.rank;
  switch (type.family) {
    case Family::A: {
      // lambda^i = e_{i+1} - centroid, alpha_i = e_i - e_{i+1}
      for (int i = 0; i <= n; ++i) {
        auto w = basis_vec(n + 1, i);
        for (auto& x : w) x = x - Rational(1, n + 1);
        t.weights_.push_back(std::move(w));
      }
      for (int i = 1; i <= n; ++i) {
        auto r = basis_vec(n + 1, i - 1);
        r[i] = Rational(-1);
        t.roots_.push_back(std::move(r));
      }
      break;
    }
    case Family::B: {
      // weights e_1..e_n, 0, -e_n..-e_1; alpha_n = e_n short
      for (int i = 0; i < n; ++i) t.weights_.push_back(basis_vec(n, i));
      t.weights_.push_back(std::vector<Rational>(n, Rational(0)));
      for (int i = n - 1; i >= 0; --i) t.weights_.push_back(negate(basis_vec(n, i)));
      for (int i = 1; i < n; ++i) {
        auto r = basis_vec(n, i - 1);
        r[i] = Rational(-1);
        t.roots_.push_back(std::move(r));
      }
      t.roots_.push_back(basis_vec(n, n - 1));
      break;
    }
    case Family::C: {
      // weights e_1..e_n, -e_n..-e_1; alpha_n = 2e_n long; dot halved
      for (int i = 0; i < n; ++i) t.weights_.push_back(basis_vec(n, i));
      for (int i = n - 1; i >= 0; --i) t.weights_.push_back(negate(basis_vec(n, i)));
      for (int i = 1; i < n; ++i) {
        auto r = basis_vec(n, i - 1);
        r[i] = Rational(-1);
        t.roots_.push_back(std::move(r));
      }
      t.roots_.push_back(basis_vec(n, n - 1, 2));
      t.gram_ = half();
      break;
    }
    case Family::D: {
      // order positions: e_1..e_{n-1}, e_n, -e_n, -e_{n-1}..-e_1
      for (int i = 0; i < n; ++i) t.weights_.push_back(basis_vec(n, i));
      for (int i = n - 1; i >= 0; --i) t.weights_.push_back(negate(basis_vec(n, i)));
      for (int i = 1; i < n; ++i) {
        auto r = basis_vec(n, i - 1);
        r[i] = Rational(-1);
        t.roots_.push_back(std::move(r));
      }
      auto r = basis_vec(n, n - 2);
      r[n - 1] = Rational(1);
      t.roots_.push_back(std::move(r));
      break;
    }
  }
  return t;
}

Rational WeightTable::dot(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
  Rational acc(0);
  for (size_t i = 0; i < u.size(); ++i) acc = acc + u[i] * v[i];
  return acc * gram_;
}

int WeightTable::order(const WeightIndex& idx) const {
  int n = type_.rank;
  if (idx.primed) {
    if (type_.family != Family::D || idx.slot != n - 1)
      throw std::invalid_argument("primed index only valid as D_n's n-1'");
    return n;
  }
  if (type_.family == Family::D) {
    if (idx.slot < 0 || idx.slot > 2 * n - 2) throw std::invalid_argument("weight index out of range");
    return idx.slot <= n - 1 ? idx.slot : idx.slot + 1;
  }
  if (idx.slot < 0 || idx.slot >= dim()) throw std::invalid_argument("weight index out of range");
  return idx.slot;
}

WeightIndex WeightTable::index_of(int o) const {
  if (o < 0 || o >= dim()) throw std::invalid_argument("order position out of range");
  if (type_.family != Family::D) return {o, false};
  int n = type_.rank;
  if (o <= n - 1) return {o, false};
  if (o == n) return {n - 1, true};
  return {o - 1, false};
}

int WeightTable::antidiagonal_order_sum() const {
  switch (type_.family) {
    case Family::A: return -1;
    case Family::B: return 2 * type_.rank;
    default: return 2 * type_.rank - 1;
  }
}

int order(const LieType& type, const WeightIndex& idx) {
  return WeightTable::make(type).order(idx);
}

Rational inner_product_weights(const LieType& type, const WeightIndex& s, const WeightIndex& t) {
  auto tab = WeightTable::make(type);
  return tab.weight_ip(tab.order(s), tab.order(t));
}

RootData root_data(const LieType& type) {
  auto tab = WeightTable::make(type);
  RootData rd;
  int n = type.rank;
  for (int i = 1; i <= n; ++i) {
    rd.roots.push_back(tab.root(i));
    rd.rho_pairings.push_back(tab.rho_root_ip(i));
  }
  rd.root_gram.assign(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) rd.root_gram[i - 1][k - 1] = tab.root_ip(i, k);
  return rd;
}

}  // namespace yy
