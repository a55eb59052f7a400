#include "yy/monodromy.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace yy {

namespace {

Laurent qm(const Rational& e, long long c = 1) { return Laurent::monomial(e, BigInt(c)); }

void add_entry(std::vector<std::map<int, Laurent>>& acc, int src, int dst, const Laurent& v) {
  if (v.is_zero()) return;
  auto& row = acc[src];
  auto it = row.find(dst);
  if (it == row.end()) {
    row.emplace(dst, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
  }
}

std::vector<std::vector<std::pair<int, Laurent>>> freeze(std::vector<std::map<int, Laurent>>&& acc) {
  std::vector<std::vector<std::pair<int, Laurent>>> rows(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) {
    rows[i].assign(acc[i].begin(), acc[i].end());
  }
  return rows;
}

// Antidiagonal wall-crossing coefficient with i the order of the source's
// second slot and j >= 1 the order shift. The case values already carry the
// rotation prefactor; the j = 0 term is the plain swap handled by the caller.
Laurent wall_coeff(const LieType& type, int n, int i, int j) {
  auto sgn = [](int k) { return (k % 2 == 0) ? 1 : -1; };
  switch (type.family) {
    case Family::B: {
      Laurent dq = qm(half()) - qm(-half());  // q^{1/2} - q^{-1/2}
      if ((i > n && i - j > n) || (0 < j && j <= i && i <= n - 1))
        return qm(Rational(j, 2), sgn(j)) * dq;
      if (0 < j && j <= i && i == n)
        return qm(Rational(j, 2), sgn(j)) * (Laurent::one() - qm(-half()));
      if (i > n && i - j == n)
        return qm(Rational(j, 2) + Rational(1, 4), sgn(j)) * (qm(Rational(1, 4)) + qm(Rational(-1, 4))) *
               (Laurent::one() - qm(Rational(-1)));
      if (i > n && i - j < n && i - j != 2 * n - i)
        return qm(Rational(j - 1, 2), sgn(j)) * dq;
      if (i > n && i - j == 2 * n - i)
        return dq * (qm(Rational(2 * (n - i + j) - 1, 2), sgn(j)) - Laurent::one());
      break;
    }
    case Family::C: {
      Laurent base = Laurent::monomial(Rational(0), sgn(j)) + Laurent::monomial(-half(), sgn(j + 1));
      if (0 < j && j <= i && i < n) return qm(Rational(j + 1, 4)) * base;
      if (i == n && j == 1) return qm(Rational(3, 4)) * (qm(Rational(-1)) - Laurent::one());
      if (i == n && 1 < j && j <= i) return qm(Rational(j + 2, 4)) * base;
      if (n < i && i <= 2 * n - 1) {
        if (i - j >= n) return qm(Rational(j + 1, 4)) * base;
        if (i - j == 2 * n - 1 - i)
          return (Laurent::one() - qm(Rational(n - i + j, 2), sgn(j))) * (qm(Rational(-1, 4)) - qm(Rational(1, 4)));
        return qm(Rational(j + 2, 4)) * base;  // i-j == n-1 and the remaining sectors
      }
      break;
    }
    case Family::D: {
      // i, j are order values here
      Laurent om1 = Laurent::one() - qm(Rational(-1));
      if ((i > n && i - j >= n) || (0 < j && j <= i && i < n))
        return qm(Rational(j + 1, 2), sgn(j)) * om1;
      if (i >= n && i - j <= n - 1) {
        Laurent r = qm(Rational(j, 2), sgn(j - 1)) * om1;
        if (2 * i - j == 2 * n - 1) r += qm(-half()) - qm(half());
        return r;
      }
      break;
    }
    case Family::A: break;
  }
  throw std::logic_error("wall coefficient case fell through for " + type.str());
}

}  // namespace

const Laurent* RMatrix::entry(int src, int dst) const {
  const auto& row = rows[src];
  auto it = std::lower_bound(row.begin(), row.end(), dst,
                             [](const auto& p, int d) { return p.first < d; });
  if (it == row.end() || it->first != dst) return nullptr;
  return &it->second;
}

RMatrix build_monodromy(const LieType& type) {
  auto tab = WeightTable::make(type);
  const int d = tab.dim();
  const int n = type.rank;
  const int ad = tab.antidiagonal_order_sum();
  std::vector<std::map<int, Laurent>> acc(d * d);

  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      int src = a * d + b;
      // rotation term: q^{-(1/2)(lambda^a, lambda^b)} at the swapped pair
      add_entry(acc, src, b * d + a, qm(-half() * tab.weight_ip(a, b)));
      if (type.family != Family::A && a + b == ad) {
        // wall-crossing terms across the antidiagonal sector
        for (int j = 1; j <= b; ++j)
          add_entry(acc, src, (b - j) * d + (ad - b + j), wall_coeff(type, n, b, j));
      } else if (a < b) {
        Laurent corr;
        if (type.family == Family::A) {
          // q^{(1/2)(l^a, l^a - l^b)} (q^{-(l^a, l^a - l^b)} - 1), times the swap prefactor
          Rational x = tab.weight_ip(a, a) - tab.weight_ip(a, b);
          corr = qm(-half() * tab.weight_ip(a, b)) * qm(half() * x) * (qm(-x) - Laurent::one());
        } else if (type.family == Family::C) {
          corr = qm(Rational(-1, 4)) - qm(Rational(1, 4));
        } else {
          corr = qm(-half()) - qm(half());
        }
        add_entry(acc, src, src, corr);
      }
    }
  }
  return RMatrix{type, d, freeze(std::move(acc))};
}

namespace {

using SparseOp = std::vector<std::vector<std::pair<int, Laurent>>>;

// (A after B): image of src under B, then A.
SparseOp compose(const SparseOp& A, const SparseOp& B) {
  SparseOp C(B.size());
  for (size_t src = 0; src < B.size(); ++src) {
    std::map<int, Laurent> out;
    for (const auto& [m, c1] : B[src]) {
      for (const auto& [dst, c2] : A[m]) {
        auto it = out.find(dst);
        Laurent v = c1 * c2;
        if (it == out.end()) {
          if (!v.is_zero()) out.emplace(dst, std::move(v));
        } else {
          it->second += v;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
    C[src].assign(out.begin(), out.end());
  }
  return C;
}

// R acting on slots (0,1) or (1,2) of V^⊗3.
SparseOp tensor3(const RMatrix& R, bool left) {
  int d = R.dim;
  SparseOp op(d * d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const auto& row = R.rows[a * d + b];
      for (int k = 0; k < d; ++k) {
        int src = left ? (a * d + b) * d + k : (k * d + a) * d + b;
        auto& out = op[src];
        out.reserve(row.size());
        for (const auto& [t, v] : row) {
          int c = t / d, dd = t % d;
          out.emplace_back(left ? (c * d + dd) * d + k : (k * d + c) * d + dd, v);
        }
        if (!left) std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      }
    }
  return op;
}

}  // namespace

bool verify_yang_baxter(const RMatrix& R) {
  SparseOp L = tensor3(R, true), M = tensor3(R, false);
  SparseOp lhs = compose(L, compose(M, L));
  SparseOp rhs = compose(M, compose(L, M));
  return lhs == rhs;
}

namespace {

// Fraction arithmetic for the dependence search; folds exact quotients.
struct Frac {
  Laurent num, den = Laurent::one();
  bool is_zero() const { return num.is_zero(); }
};
Frac fsub(const Frac& a, const Frac& b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
Frac fmul(const Frac& a, const Frac& b) { return {a.num * b.num, a.den * b.den}; }
Frac fdiv(const Frac& a, const Frac& b) { return {a.num * b.den, a.den * b.num}; }

std::vector<SparseOp> rmatrix_powers(const RMatrix& R, int top) {
  int d = R.dim;
  SparseOp I(d * d);
  for (int i = 0; i < d * d; ++i) I[i] = {{i, Laurent::one()}};
  std::vector<SparseOp> pows{I, R.rows};
  for (int k = 2; k <= top; ++k) pows.push_back(compose(R.rows, pows.back()));
  return pows;
}

}  // namespace

std::vector<Laurent> minimal_polynomial(const RMatrix& R) {
  auto pows = rmatrix_powers(R, 3);
  int N = R.dim * R.dim;
  auto coord = [&](const SparseOp& M, int src, int dst) -> Laurent {
    for (const auto& [t, v] : M[src])
      if (t == dst) return v;
    return Laurent::zero();
  };
  // coordinate set: union of supports
  std::vector<std::pair<int, int>> coords;
  for (int s = 0; s < N; ++s) {
    std::vector<int> dsts;
    for (const auto& M : pows)
      for (const auto& [t, v] : M[s]) dsts.push_back(t);
    std::sort(dsts.begin(), dsts.end());
    dsts.erase(std::unique(dsts.begin(), dsts.end()), dsts.end());
    for (int t : dsts) coords.emplace_back(s, t);
  }
  for (int deg = 1; deg <= 3; ++deg) {
    // solve sum_i c_i P_i = -P_deg by elimination over the fraction field
    std::vector<std::vector<Frac>> rows;
    rows.reserve(coords.size());
    for (auto [s, t] : coords) {
      std::vector<Frac> row;
      for (int i = 0; i < deg; ++i) row.push_back({coord(pows[i], s, t)});
      row.push_back({coord(pows[deg], s, t)});
      rows.push_back(std::move(row));
    }
    int cur = 0;
    bool singular = false;
    for (int col = 0; col < deg && !singular; ++col) {
      int p = -1;
      for (int r = cur; r < int(rows.size()); ++r)
        if (!rows[r][col].is_zero()) { p = r; break; }
      if (p < 0) { singular = true; break; }
      std::swap(rows[cur], rows[p]);
      for (int r = 0; r < int(rows.size()); ++r) {
        if (r == cur || rows[r][col].is_zero()) continue;
        Frac f = fdiv(rows[r][col], rows[cur][col]);
        for (int cc = col; cc <= deg; ++cc) rows[r][cc] = fsub(rows[r][cc], fmul(f, rows[cur][cc]));
      }
      ++cur;
    }
    if (singular) continue;
    std::vector<Laurent> coeffs(deg);
    bool laurent_ok = true;
    for (int col = 0; col < deg && laurent_ok; ++col) {
      Frac sol = fdiv(rows[col][deg], rows[col][col]);
      auto q = divide_exact(sol.num, sol.den);
      if (!q) { laurent_ok = false; break; }
      coeffs[col] = -*q;
    }
    if (!laurent_ok) continue;
    // exact verification of p(R) = 0 on every coordinate
    bool ok = true;
    for (auto [s, t] : coords) {
      Laurent accv = coord(pows[deg], s, t);
      for (int i = 0; i < deg; ++i) accv += coeffs[i] * coord(pows[i], s, t);
      if (!accv.is_zero()) { ok = false; break; }
    }
    if (!ok) continue;
    coeffs.push_back(Laurent::one());
    return coeffs;
  }
  throw std::runtime_error("no exact linear dependence among I, R, R^2, R^3 for " + R.type.str());
}

RMatrix rmatrix_inverse(const RMatrix& R) {
  auto p = minimal_polynomial(R);
  int deg = int(p.size()) - 1;
  if (!p[0].is_unit_monomial())
    throw std::runtime_error("minimal polynomial constant term is not a unit monomial");
  // R^{-1} = -(R^{deg-1} + c_{deg-1} R^{deg-2} + ... + c_1 I) / c_0
  auto pows = rmatrix_powers(R, deg - 1);
  Laurent scale = -p[0].unit_inverse();
  int N = R.dim * R.dim;
  std::vector<std::map<int, Laurent>> acc(N);
  for (int k = 0; k < deg; ++k) {
    const Laurent coeff = (k == deg - 1) ? Laurent::one() : p[k + 1];
    const SparseOp& M = pows[k];
    for (int s = 0; s < N; ++s)
      for (const auto& [t, v] : M[s]) add_entry(acc, s, t, v * coeff);
  }
  RMatrix inv{R.type, R.dim, freeze(std::move(acc))};
  for (auto& row : inv.rows)
    for (auto& [t, v] : row) v = v * scale;
  return inv;
}

namespace {

// Root multiset of the lowest singular weight in V ⊗ V (Eq-89 sectors):
// A: {1}; B: 1..n twice; C: 1..n-1 twice, n once; D: 1..n-2 twice, n-1 and n once.
std::vector<int> lowest_root_multiset(const LieType& type) {
  int n = type.rank;
  std::vector<int> I;
  switch (type.family) {
    case Family::A: I = {1}; break;
    case Family::B:
      for (int i = 1; i <= n; ++i) { I.push_back(i); I.push_back(i); }
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) { I.push_back(i); I.push_back(i); }
      I.push_back(n);
      break;
    case Family::D:
      for (int i = 1; i <= n - 2; ++i) { I.push_back(i); I.push_back(i); }
      I.push_back(n - 1);
      I.push_back(n);
      break;
  }
  return I;
}

}  // namespace

Laurent twist_eigenvalue(const LieType& type) {
  auto tab = WeightTable::make(type);
  auto I = lowest_root_multiset(type);
  Rational self_sum(0), omega_sum(0);
  // pairwise sum over the multiset: [ (sum alpha)^2 - sum (alpha_i, alpha_i) ] / 2
  std::vector<Rational> total(tab.root(1).size(), Rational(0));
  for (int i : I) {
    const auto& r = tab.root(i);
    for (size_t k = 0; k < r.size(); ++k) total[k] = total[k] + r[k];
    self_sum = self_sum + tab.root_ip(i, i);
    omega_sum = omega_sum + tab.omega1_root_ip(i);
  }
  Rational total_sq(0);
  for (size_t k = 0; k < total.size(); ++k) total_sq = total_sq + total[k] * total[k];
  total_sq = total_sq * tab.gram_scale();
  Rational cross_sum = (total_sq - self_sum) * half();
  Rational expo = -half() * (tab.omega1_norm() - Rational(2) * omega_sum + cross_sum);
  long long sign = (I.size() % 2 == 0) ? 1 : -1;
  return Laurent::monomial(expo, BigInt(sign));
}

PairingData build_pairing(const LieType& type) {
  auto tab = WeightTable::make(type);
  const int n = type.rank;
  const int d = tab.dim();
  if (type.family == Family::A && n >= 2)
    throw std::invalid_argument("pairing not invertible for " + type.str());

  PairingData p;
  p.type = type;
  p.dim = d;
  p.partner.resize(d);
  p.creation.resize(d);
  auto set = [&](int a, int b, Laurent v) {
    p.partner[a] = b;
    p.creation[a] = std::move(v);
  };
  auto sgn = [](int k) { return (k % 2 == 0) ? 1 : -1; };
  switch (type.family) {
    case Family::A:
      set(1, 0, qm(Rational(-1, 4)));
      set(0, 1, Laurent::monomial(Rational(1, 4), -1));
      break;
    case Family::B:
      for (int i = 0; i <= 2 * n; ++i) {
        if (i < n) {
          set(2 * n - i, i, qm(Rational(i - n, 2) + Rational(1, 4), sgn(i)));
        } else if (i == n) {
          // middle coefficient is the binomial (-1)^n (q^{1/4} + q^{-1/4})
          set(n, n, Laurent::monomial(Rational(1, 4), sgn(n)) + Laurent::monomial(Rational(-1, 4), sgn(n)));
        } else {
          set(2 * n - i, i, qm(Rational(i - n, 2) - Rational(1, 4), sgn(i)));
        }
      }
      break;
    case Family::C:
      for (int i = 0; i <= 2 * n - 1; ++i)
        set(2 * n - 1 - i, i, qm(i < n ? Rational(i - n, 4) : Rational(i + 1 - n, 4), sgn(i)));
      break;
    case Family::D:
      for (int o = 0; o <= 2 * n - 1; ++o) {
        if (o <= n - 2) set(2 * n - 1 - o, o, qm(Rational(o + 1 - n, 2), sgn(o)));
        else if (o == n - 1 || o == n) set(2 * n - 1 - o, o, Laurent::monomial(Rational(0), sgn(n - 1)));
        else set(2 * n - 1 - o, o, qm(Rational(o - n, 2), sgn(o - 1)));
      }
      break;
  }
  // e is supported on (partner[b], b) with one entry per row and per column;
  // creation[a] = e^{a, partner[a]} because partner is an involution.
  p.annihilation.resize(d);
  p.eta.resize(d);
  for (int a = 0; a < d; ++a) {
    int pa = p.partner[a];
    // sum_b M_{a,b} M^{b,c} = delta_a^c  =>  M_{a, p(a)} = 1 / e^{p(a), a}
    p.annihilation[a] = make_frac(Laurent::one(), p.creation[pa]);
    auto eta = divide_exact(p.creation[a], p.creation[pa]);
    if (!eta || !eta->is_unit_monomial())
      throw std::logic_error("eta entry is not a unit monomial");
    p.eta[a] = *eta;
  }
  p.twist = twist_eigenvalue(type);
  p.unknot = Laurent::zero();
  for (const auto& e : p.eta) p.unknot += e;
  return p;
}

bool verify_pairing_eigenvector(const RMatrix& R, const PairingData& p) {
  const int d = R.dim;
  std::map<int, Laurent> sum;
  for (int a = 0; a < d; ++a) {
    int src = a * d + p.partner[a];
    for (const auto& [dst, v] : R.rows[src]) {
      auto it = sum.find(dst);
      Laurent term = p.creation[a] * v;
      if (it == sum.end()) {
        if (!term.is_zero()) sum.emplace(dst, std::move(term));
      } else {
        it->second += term;
        if (it->second.is_zero()) sum.erase(it);
      }
    }
  }
  // must equal d * e on the support and vanish elsewhere
  std::map<int, Laurent> expect;
  for (int c = 0; c < d; ++c) {
    Laurent v = p.twist * p.creation[c];
    if (!v.is_zero()) expect.emplace(c * d + p.partner[c], std::move(v));
  }
  return sum == expect;
}

bool verify_pairing_eigenvector(const LieType& type) {
  return verify_pairing_eigenvector(build_monodromy(type), build_pairing(type));
}

std::vector<LaurentFrac> build_Q(const LieType& type) {
  auto tab = WeightTable::make(type);
  const int d = tab.dim();
  const int n = type.rank;
  const int ad = tab.antidiagonal_order_sum();
  std::vector<LaurentFrac> diag(d * d, LaurentFrac{Laurent::one(), Laurent::one()});
  if (type.family == Family::A) return diag;
  for (int a = 0; a < d; ++a) {
    int b = ad - a;
    if (b < 0 || b >= d) continue;
    int o = a;  // order index along the sector
    LaurentFrac v{Laurent::integer(o % 2 == 0 ? 1 : -1), Laurent::one()};
    if (type.family == Family::B && o == n) {
      v = make_frac(Laurent::integer(n % 2 == 0 ? 1 : -1),
                    Laurent::monomial(Rational(1, 4), 1) + Laurent::monomial(Rational(-1, 4), 1));
    } else if ((type.family == Family::C || type.family == Family::D) && o >= n) {
      v.num = Laurent::integer((o - 1) % 2 == 0 ? 1 : -1);
    }
    diag[a * d + b] = std::move(v);
  }
  return diag;
}

SummaryEntry summary_entry(const LieType& type, int a, int b) {
  const int n = type.rank;
  auto sgn = [](int k) { return (k % 2 == 0) ? 1 : -1; };
  SummaryEntry out;
  switch (type.family) {
    case Family::A: return out;
    case Family::B: {
      int j = a + b - 2 * n;
      if (j < 1 || a > 2 * n || b > 2 * n) return out;
      Laurent dq = qm(half()) - qm(-half());
      out.defined = true;
      if (a > n && b == n) {
        out.value = qm(Rational(a - n, 2), sgn(a + n)) * dq * (Laurent::one() + qm(-half()));
      } else if ((a < n && b > n) || (a > n && b < n)) {
        out.value = Laurent::monomial(Rational(a + b - 2 * n, 2), sgn(a + b)) * dq;
      } else if (a > n && b > n) {
        out.value = dq * qm(Rational(a + b - 2 * n - 1, 2), sgn(a + b));
        if (a == b) out.value = out.value - dq;
      } else if (a == n && b > n) {
        out.value = qm(Rational(b - n, 2), sgn(n + b)) * (Laurent::one() - qm(-half()));
      } else {
        out.defined = false;
      }
      return out;
    }
    case Family::C: {
      int j = a + b - 2 * n + 1;
      if (j < 1 || a > 2 * n - 1 || b > 2 * n - 1) return out;
      Laurent dq14 = qm(Rational(1, 4)) - qm(Rational(-1, 4));
      if ((a <= n - 1 && b >= n) || (a >= n && b <= n - 1)) {
        out.defined = true;
        out.value = qm(Rational(-(2 * n - a - b - 1), 4), sgn(a + b + 1)) * dq14;
      } else if (a >= n && b >= n) {
        out.defined = true;
        out.value = qm(Rational(-(2 * n - a - b - 2), 4), sgn(a + b + 1)) * dq14;
        if (a == b) out.value = out.value - dq14;
      }
      return out;
    }
    case Family::D: {
      // only the unambiguous line of the printed summary: o(a) <= n-1 & o(b) >= n
      int j = a + b - 2 * n + 1;  // a, b order values
      if (j < 1 || a > n - 1 || b < n || b > 2 * n - 1) return out;
      out.defined = true;
      out.value = qm(Rational(a + b + 1 - 2 * n, 2), sgn(a + b + 1)) * (qm(half()) - qm(-half()));
      return out;
    }
  }
  return out;
}

}  // namespace yy
