#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "yy/braid.hpp"
#include "yy/laurent.hpp"
#include "yy/liedata.hpp"
#include "yy/monodromy.hpp"

namespace yy {

using Json = nlohmann::json;

// Canonical encoding: array of [exp_num, exp_den, coeff] triples sorted by
// ascending exponent, coefficient as a decimal string (coefficients outgrow
// any fixed width under braid products).
Json laurent_to_json(const Laurent& a);
std::string laurent_serialize(const Laurent& a);

// Strict parser: rejects malformed triples, non-reduced or zero-denominator
// exponents, zero or unsorted terms. Accepts integer coefficients too.
Laurent laurent_parse(const Json& j);
Laurent laurent_parse(const std::string& text);

Json frac_to_json(const LaurentFrac& f);

// D_n primed indices encode as {"slot": k, "primed": true}; everything else
// as the bare slot number.
Json weight_index_to_json(const WeightIndex& idx);

Json rmatrix_to_json(const RMatrix& R);

Json knot_invariant_to_json(const KnotInvariant& inv);

}  // namespace yy
