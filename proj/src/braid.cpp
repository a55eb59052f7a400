#include "yy/braid.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace yy {

BraidWord parse_braid(const std::string& text, std::optional<int> strands_hint) {
  BraidWord w;
  std::istringstream is(text);
  std::string tok;
  int max_index = 0;
  while (is >> tok) {
    size_t pos = 0;
    if (tok.rfind("sigma", 0) == 0) pos = 5;
    else if (tok.rfind("s", 0) == 0) pos = 1;
    else throw std::invalid_argument("malformed braid token: " + tok);
    size_t caret = tok.find('^', pos);
    std::string num = tok.substr(pos, caret == std::string::npos ? std::string::npos : caret - pos);
    int sign = 1;
    if (caret != std::string::npos) {
      std::string e = tok.substr(caret + 1);
      if (e == "-1") sign = -1;
      else if (e == "1") sign = 1;
      else throw std::invalid_argument("malformed braid exponent: " + tok);
    }
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed braid token: " + tok);
    int k = std::stoi(num);
    if (k < 1) throw std::invalid_argument("braid generator index must be >= 1: " + tok);
    max_index = std::max(max_index, k);
    w.letters.push_back(sign * k);
  }
  w.strands = strands_hint.value_or(std::max(1, max_index + 1));
  if (w.strands < 1) throw std::invalid_argument("strand count must be >= 1");
  if (max_index >= w.strands)
    throw std::invalid_argument("generator index " + std::to_string(max_index) +
                                " out of range for " + std::to_string(w.strands) + " strands");
  return w;
}

int writhe(const BraidWord& beta) {
  int w = 0;
  for (int l : beta.letters) w += (l > 0) ? 1 : -1;
  return w;
}

namespace {

using Col = std::vector<std::pair<std::uint32_t, Laurent>>;

struct WordEvaluator {
  int dim;
  int strands;
  const std::vector<std::vector<std::pair<int, Laurent>>>& pos_rows;  // action of a positive letter
  const std::vector<std::vector<std::pair<int, Laurent>>>& neg_rows;
  std::vector<std::uint32_t> stride;

  WordEvaluator(int d, int m, const std::vector<std::vector<std::pair<int, Laurent>>>& pos,
                const std::vector<std::vector<std::pair<int, Laurent>>>& neg)
      : dim(d), strands(m), pos_rows(pos), neg_rows(neg), stride(m) {
    std::uint32_t s = 1;
    for (int k = m - 1; k >= 0; --k) { stride[k] = s; s *= d; }
  }

  // image of basis vector `col` under the word, letters applied left to right
  Col apply(const std::vector<int>& letters, std::uint32_t col) const {
    Col state{{col, Laurent::one()}};
    Col next;
    for (int letter : letters) {
      int k = std::abs(letter) - 1;
      const auto& rows = (letter > 0) ? pos_rows : neg_rows;
      next.clear();
      next.reserve(state.size() * 2);
      for (const auto& [idx, c] : state) {
        int a = int((idx / stride[k]) % std::uint32_t(dim));
        int b = int((idx / stride[k + 1]) % std::uint32_t(dim));
        std::uint32_t base = idx - std::uint32_t(a) * stride[k] - std::uint32_t(b) * stride[k + 1];
        for (const auto& [t, v] : rows[a * dim + b]) {
          std::uint32_t nidx = base + std::uint32_t(t / dim) * stride[k] + std::uint32_t(t % dim) * stride[k + 1];
          next.emplace_back(nidx, c * v);
        }
      }
      std::sort(next.begin(), next.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      state.clear();
      for (auto& [idx, c] : next) {
        if (!state.empty() && state.back().first == idx) {
          state.back().second += c;
          if (state.back().second.is_zero()) state.pop_back();
        } else if (!c.is_zero()) {
          state.emplace_back(idx, std::move(c));
        }
      }
    }
    return state;
  }
};

}  // namespace

TensorOperator represent(const RMatrix& R, const BraidWord& beta) {
  bool has_negative = false, has_positive = false;
  for (int l : beta.letters) (l > 0 ? has_positive : has_negative) = true;
  RMatrix Rinv;
  if (has_positive) Rinv = rmatrix_inverse(R);
  const auto& pos = has_positive ? Rinv.rows : R.rows;  // positive letter -> R^{-1}
  WordEvaluator ev(R.dim, beta.strands, pos, R.rows);
  TensorOperator T;
  T.strands = beta.strands;
  T.dim = R.dim;
  std::uint32_t total = 1;
  for (int k = 0; k < beta.strands; ++k) total *= std::uint32_t(R.dim);
  T.columns.resize(total);
  for (std::uint32_t col = 0; col < total; ++col) T.columns[col] = ev.apply(beta.letters, col);
  return T;
}

std::vector<Laurent> eta_matrix(const PairingData& p) { return p.eta; }

Laurent quantum_trace(const TensorOperator& T, const PairingData& p) {
  if (T.dim != p.dim) throw std::invalid_argument("dimension mismatch in quantum trace");
  Laurent acc;
  for (std::uint32_t col = 0; col < T.columns.size(); ++col) {
    const auto& column = T.columns[col];
    auto it = std::lower_bound(column.begin(), column.end(), col,
                               [](const auto& e, std::uint32_t c) { return e.first < c; });
    if (it == column.end() || it->first != col) continue;
    Laurent weight = Laurent::one();
    std::uint32_t x = col;
    for (int k = 0; k < T.strands; ++k) {
      weight = weight * p.eta[x % std::uint32_t(T.dim)];
      x /= std::uint32_t(T.dim);
    }
    acc += it->second * weight;
  }
  return acc;
}

InvariantEngine::InvariantEngine(const LieType& type)
    : R_(build_monodromy(type)), Rinv_(rmatrix_inverse(R_)), pairing_(build_pairing(type)) {}

KnotInvariant InvariantEngine::eval(const BraidWord& beta) const {
  WordEvaluator ev(R_.dim, beta.strands, Rinv_.rows, R_.rows);
  std::uint32_t total = 1;
  for (int k = 0; k < beta.strands; ++k) total *= std::uint32_t(R_.dim);

  // streamed quantum trace; columns are never stored
  Laurent trace;
  for (std::uint32_t col = 0; col < total; ++col) {
    Col image = ev.apply(beta.letters, col);
    auto it = std::lower_bound(image.begin(), image.end(), col,
                               [](const auto& e, std::uint32_t c) { return e.first < c; });
    if (it == image.end() || it->first != col) continue;
    Laurent weight = Laurent::one();
    std::uint32_t x = col;
    for (int k = 0; k < beta.strands; ++k) {
      weight = weight * pairing_.eta[x % std::uint32_t(R_.dim)];
      x /= std::uint32_t(R_.dim);
    }
    trace += it->second * weight;
  }

  KnotInvariant out;
  out.writhe = writhe(beta);
  out.framed_trace = trace;
  out.unknot_value = pairing_.unknot;
  Laurent regularized = pairing_.twist.pow(-out.writhe) * trace;
  out.normalized = make_frac(std::move(regularized), pairing_.unknot);
  return out;
}

KnotInvariant knot_invariant(const LieType& type, const BraidWord& beta) {
  return InvariantEngine(type).eval(beta);
}

std::vector<std::string> markov_trials(const LieType& type, int samples, unsigned seed) {
  InvariantEngine engine(type);
  std::mt19937 rng(seed);
  std::vector<std::string> failures;
  auto word_str = [](const BraidWord& b) {
    std::string s = std::to_string(b.strands) + ":";
    for (int l : b.letters) s += " " + std::to_string(l);
    return s;
  };
  for (int t = 0; t < samples; ++t) {
    int m = std::uniform_int_distribution<int>(2, 4)(rng);
    int len = std::uniform_int_distribution<int>(1, 8)(rng);
    BraidWord beta;
    beta.strands = m;
    for (int i = 0; i < len; ++i) {
      int k = std::uniform_int_distribution<int>(1, m - 1)(rng);
      beta.letters.push_back(rng() % 2 ? k : -k);
    }
    KnotInvariant base = engine.eval(beta);

    int cut = std::uniform_int_distribution<int>(0, len)(rng);
    BraidWord rotated{m, {}};
    rotated.letters.insert(rotated.letters.end(), beta.letters.begin() + cut, beta.letters.end());
    rotated.letters.insert(rotated.letters.end(), beta.letters.begin(), beta.letters.begin() + cut);
    if (engine.eval(rotated).normalized != base.normalized)
      failures.push_back("conjugation mismatch on " + word_str(beta) + " cut " + std::to_string(cut));

    for (int sign : {+1, -1}) {
      BraidWord stab{m + 1, beta.letters};
      stab.letters.push_back(sign * m);
      if (engine.eval(stab).normalized != base.normalized)
        failures.push_back((sign > 0 ? std::string("+") : std::string("-")) +
                           "stabilization mismatch on " + word_str(beta));
    }
  }
  return failures;
}

}  // namespace yy
