#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "yy/liedata.hpp"

using namespace yy;

namespace {

// piecewise inner product tables the realizations must reproduce
Rational expected_ip(const LieType& t, int os, int ot) {
  int n = t.rank;
  switch (t.family) {
    case Family::A:
      return (os == ot) ? Rational(n, n + 1) : Rational(-1, n + 1);
    case Family::B:
      if (os + ot != 2 * n) return Rational(os == ot ? 1 : 0);
      return Rational(os == ot ? 0 : -1);
    case Family::C:
      if (os == ot) return Rational(1, 2);
      return Rational(os + ot == 2 * n - 1 ? -1 : 0, 2);
    case Family::D:
      if (os + ot == 2 * n - 1) return Rational(-1);
      return Rational(os == ot ? 1 : 0);
  }
  return Rational(0);
}

}  // namespace

TEST_CASE("fundamental dimensions") {
  CHECK(dim_fundamental({Family::A, 1}) == 2);
  CHECK(dim_fundamental({Family::B, 2}) == 5);
  CHECK(dim_fundamental({Family::C, 3}) == 6);
  CHECK(dim_fundamental({Family::D, 3}) == 6);
}

TEST_CASE("rank bounds") {
  CHECK_THROWS_AS(dim_fundamental({Family::A, 0}), std::invalid_argument);
  CHECK_THROWS_AS(dim_fundamental({Family::B, 1}), std::invalid_argument);
  CHECK_THROWS_AS(dim_fundamental({Family::C, 1}), std::invalid_argument);
  CHECK_THROWS_AS(dim_fundamental({Family::D, 2}), std::invalid_argument);
}

TEST_CASE("order map") {
  CHECK(order({Family::D, 4}, {3, true}) == 4);
  CHECK(order({Family::D, 4}, {4, false}) == 5);
  CHECK(order({Family::B, 3}, {5, false}) == 5);
  CHECK_THROWS_AS(order({Family::B, 3}, {1, true}), std::invalid_argument);
  CHECK_THROWS_AS(order({Family::D, 4}, {2, true}), std::invalid_argument);

  // bijection onto 0..dim-1 with o(n-1) = n-1, o(n-1') = n
  for (int n : {3, 4, 5}) {
    auto tab = WeightTable::make({Family::D, n});
    std::vector<bool> seen(tab.dim(), false);
    for (int o = 0; o < tab.dim(); ++o) {
      WeightIndex idx = tab.index_of(o);
      CHECK(tab.order(idx) == o);
      CHECK(!seen[o]);
      seen[o] = true;
    }
    CHECK(tab.order({n - 1, false}) == n - 1);
    CHECK(tab.order({n - 1, true}) == n);
  }
}

TEST_CASE("weight inner product examples") {
  CHECK(inner_product_weights({Family::B, 2}, {1, false}, {3, false}) == Rational(-1));
  CHECK(inner_product_weights({Family::C, 3}, {2, false}, {2, false}) == Rational(1, 2));
  CHECK(inner_product_weights({Family::A, 1}, {0, false}, {1, false}) == Rational(-1, 2));
  CHECK(inner_product_weights({Family::D, 4}, {3, true}, {3, false}) == Rational(-1));
  CHECK(inner_product_weights({Family::D, 4}, {3, true}, {3, true}) == Rational(1));
}

TEST_CASE("full inner product tables, ranks up to 6") {
  std::vector<LieType> types;
  for (int n = 1; n <= 6; ++n) types.push_back({Family::A, n});
  for (int n = 2; n <= 6; ++n) { types.push_back({Family::B, n}); types.push_back({Family::C, n}); }
  for (int n = 3; n <= 6; ++n) types.push_back({Family::D, n});
  for (const auto& t : types) {
    auto tab = WeightTable::make(t);
    for (int s = 0; s < tab.dim(); ++s)
      for (int u = 0; u < tab.dim(); ++u)
        CHECK(tab.weight_ip(s, u) == expected_ip(t, s, u));
  }
}

TEST_CASE("fundamental weight pairing with simple roots") {
  std::vector<LieType> types = {{Family::A, 3}, {Family::B, 2}, {Family::B, 4},
                                {Family::C, 2}, {Family::C, 5}, {Family::D, 3}, {Family::D, 6}};
  for (const auto& t : types) {
    auto tab = WeightTable::make(t);
    for (int i = 1; i <= t.rank; ++i) {
      Rational lhs = Rational(2) * tab.omega1_root_ip(i) / tab.root_ip(i, i);
      CHECK(lhs == Rational(i == 1 ? 1 : 0));
    }
  }
}

TEST_CASE("root data examples") {
  auto a3 = root_data({Family::A, 3});
  CHECK(a3.root_gram[0][1] == Rational(-1));
  CHECK(a3.root_gram[0][0] == Rational(2));
  CHECK(a3.root_gram[0][2] == Rational(0));

  auto b2 = root_data({Family::B, 2});
  CHECK(b2.root_gram[1][1] == Rational(1));  // short root
  CHECK(b2.rho_pairings[1] == Rational(1, 2));

  auto c2 = root_data({Family::C, 2});
  CHECK(c2.root_gram[1][1] == Rational(2));  // long root under gram 1/2
  CHECK(c2.rho_pairings[1] == Rational(1));
}

TEST_CASE("weight chain against simple roots") {
  // A_n: lambda^{i-1} - lambda^i = alpha_i
  for (int n : {1, 3, 5}) {
    auto tab = WeightTable::make({Family::A, n});
    for (int i = 1; i <= n; ++i) {
      const auto& hi = tab.weight(i - 1);
      const auto& lo = tab.weight(i);
      const auto& alpha = tab.root(i);
      for (size_t k = 0; k < hi.size(); ++k) CHECK(hi[k] - lo[k] == alpha[k]);
    }
  }
  // D_n: lambda^{n-1'} = omega1 - alpha_1 - ... - alpha_{n-2} - alpha_n
  for (int n : {3, 5}) {
    auto tab = WeightTable::make({Family::D, n});
    std::vector<Rational> acc = tab.weight(0);
    for (int i = 1; i <= n - 2; ++i)
      for (size_t k = 0; k < acc.size(); ++k) acc[k] = acc[k] - tab.root(i)[k];
    for (size_t k = 0; k < acc.size(); ++k) acc[k] = acc[k] - tab.root(n)[k];
    CHECK(acc == tab.weight(tab.order({n - 1, true})));
  }
}
