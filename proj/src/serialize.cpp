#include "yy/serialize.hpp"

#include <stdexcept>

namespace yy {

Json laurent_to_json(const Laurent& a) {
  Json arr = Json::array();
  for (const auto& t : a.terms())
    arr.push_back(Json::array({t.exp.num(), t.exp.den(), t.coeff.str()}));
  return arr;
}

std::string laurent_serialize(const Laurent& a) { return laurent_to_json(a).dump(); }

Laurent laurent_parse(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("laurent: expected array of triples");
  std::vector<Laurent::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("laurent: malformed triple");
    if (!t[0].is_number_integer() || !t[1].is_number_integer())
      throw std::invalid_argument("laurent: exponent parts must be integers");
    long long num = t[0].get<long long>();
    long long den = t[1].get<long long>();
    if (den <= 0) throw std::invalid_argument("laurent: exponent denominator must be positive");
    Rational e(num, den);
    if (e.num() != num || e.den() != den)
      throw std::invalid_argument("laurent: exponent not in lowest terms");
    BigInt coeff;
    if (t[2].is_string()) {
      const std::string s = t[2].get<std::string>();
      if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
        throw std::invalid_argument("laurent: malformed coefficient string");
      coeff = BigInt(s);
    } else if (t[2].is_number_integer()) {
      coeff = BigInt(t[2].get<long long>());
    } else {
      throw std::invalid_argument("laurent: coefficient must be string or integer");
    }
    if (coeff == 0) throw std::invalid_argument("laurent: zero coefficient stored");
    if (!terms.empty() && !(terms.back().exp < e))
      throw std::invalid_argument("laurent: exponents not strictly ascending");
    terms.push_back({e, std::move(coeff)});
  }
  return Laurent::from_sorted_terms(std::move(terms));
}

Laurent laurent_parse(const std::string& text) { return laurent_parse(Json::parse(text)); }

Json frac_to_json(const LaurentFrac& f) {
  return Json{{"num", laurent_to_json(f.num)}, {"den", laurent_to_json(f.den)}};
}

Json weight_index_to_json(const WeightIndex& idx) {
  if (idx.primed) return Json{{"slot", idx.slot}, {"primed", true}};
  return Json(idx.slot);
}

Json rmatrix_to_json(const RMatrix& R) {
  auto tab = WeightTable::make(R.type);
  Json entries = Json::array();
  for (int src = 0; src < R.dim * R.dim; ++src) {
    auto si = tab.index_of(src / R.dim);
    auto sj = tab.index_of(src % R.dim);
    for (const auto& [dst, v] : R.rows[src]) {
      Json e;
      e["src"] = Json::array({weight_index_to_json(si), weight_index_to_json(sj)});
      e["dst"] = Json::array(
          {weight_index_to_json(tab.index_of(dst / R.dim)), weight_index_to_json(tab.index_of(dst % R.dim))});
      e["poly"] = laurent_to_json(v);
      entries.push_back(std::move(e));
    }
  }
  return Json{{"dim", R.dim}, {"entries", std::move(entries)}};
}

Json knot_invariant_to_json(const KnotInvariant& inv) {
  return Json{{"writhe", inv.writhe},
              {"framed_trace", laurent_to_json(inv.framed_trace)},
              {"unknot_value", laurent_to_json(inv.unknot_value)},
              {"normalized", frac_to_json(inv.normalized)}};
}

}  // namespace yy
