#include "yy/cli.hpp"

#include <CLI11.hpp>
#include <complex>
#include <iostream>
#include <sstream>

#include "yy/bethe.hpp"
#include "yy/braid.hpp"
#include "yy/serialize.hpp"

namespace yy {

namespace {

LieType parse_type(const std::string& family, int rank) {
  LieType t{family_from_char(family.empty() ? '?' : family[0]), rank};
  validate(t);
  return t;
}

LValue parse_l(const std::string& text) {
  LValue l;
  std::string digits = text;
  if (!digits.empty() && (digits.back() == 'p' || digits.back() == 'P')) {
    l.primed = true;
    digits.pop_back();
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw CLI::ValidationError("--l", "expected an integer with optional 'p' suffix");
  l.value = std::stoi(digits);
  return l;
}

Complex parse_complex(const std::string& text) {
  std::istringstream is(text);
  double re = 0, im = 0;
  char comma = 0;
  if (!(is >> re)) throw CLI::ValidationError("complex", "expected re or re,im");
  if (is >> comma) {
    if (comma != ',' || !(is >> im)) throw CLI::ValidationError("complex", "expected re,im");
  }
  return Complex(re, im);
}

Json critical_json(const CriticalSolution& sol, bool ordering_ok) {
  Json coords = Json::array();
  for (const auto& w : sol.coords) coords.push_back(Json::array({w.real(), w.imag()}));
  return Json{{"coords", std::move(coords)}, {"residual", sol.residual}, {"ordering_ok", ordering_ok}};
}

// ---- verification suites ----

Json run_suite(const std::string& suite, const LieType& type, int samples, unsigned seed) {
  Json failures = Json::array();
  if (suite == "ybe") {
    if (!verify_yang_baxter(build_monodromy(type)))
      failures.push_back({{"check", "yang-baxter"}, {"type", type.str()}});
  } else if (suite == "eigen") {
    auto R = build_monodromy(type);
    auto p = build_pairing(type);
    if (!verify_pairing_eigenvector(R, p))
      failures.push_back({{"check", "pairing-eigenvector"}, {"type", type.str()}});
    // annihilation really is a two-sided inverse on the support
    for (int a = 0; a < p.dim; ++a) {
      LaurentFrac prod = p.annihilation[a] * LaurentFrac{p.creation[p.partner[a]], Laurent::one()};
      if (prod != LaurentFrac{Laurent::one(), Laurent::one()})
        failures.push_back({{"check", "annihilation-inverse"}, {"index", a}});
    }
  } else if (suite == "minpoly") {
    auto R = build_monodromy(type);
    auto mp = minimal_polynomial(R);
    int expected_deg = (type.family == Family::A) ? 2 : 3;
    if (int(mp.size()) - 1 != expected_deg)
      failures.push_back({{"check", "minpoly-degree"},
                          {"got", int(mp.size()) - 1},
                          {"expected", expected_deg}});
    if (!mp[0].is_unit_monomial())
      failures.push_back({{"check", "minpoly-constant-unit"}, {"got", laurent_to_json(mp[0])}});
    auto inv = rmatrix_inverse(R);
    BraidWord id2{2, {1, -1}};
    auto T = represent(R, id2);
    for (std::uint32_t col = 0; col < T.columns.size(); ++col) {
      const auto& c = T.columns[col];
      if (c.size() != 1 || c[0].first != col || !c[0].second.is_one()) {
        failures.push_back({{"check", "inverse-roundtrip"}, {"column", col}});
        break;
      }
    }
  } else if (suite == "blocks") {
    auto R = build_monodromy(type);
    auto tab = WeightTable::make(type);
    int d = R.dim;
    int ad = tab.antidiagonal_order_sum();
    auto weight_sum_equal = [&](int p1, int p2) {
      const auto &wa = tab.weight(p1 / d), &wb = tab.weight(p1 % d);
      const auto &wc = tab.weight(p2 / d), &wd = tab.weight(p2 % d);
      for (size_t k = 0; k < wa.size(); ++k)
        if (!(wa[k] + wb[k] == wc[k] + wd[k])) return false;
      return true;
    };
    for (int src = 0; src < d * d; ++src) {
      int a = src / d, b = src % d;
      for (const auto& [dst, v] : R.rows[src]) {
        if (!weight_sum_equal(src, dst))
          failures.push_back({{"check", "weight-conservation"}, {"src", src}, {"dst", dst}});
      }
      bool antidiag = (type.family != Family::A) && (a + b == ad);
      if (!antidiag && a >= b) {
        // pure monomial swap rows
        const auto& row = R.rows[src];
        Laurent expect = Laurent::monomial(-half() * tab.weight_ip(a, b), 1);
        if (row.size() != 1 || row[0].first != b * d + a || row[0].second != expect)
          failures.push_back({{"check", "pure-swap-row"}, {"src", src}});
      }
      if (antidiag) {
        for (const auto& [dst, v] : R.rows[src]) {
          int bt = dst % d;
          if (bt == a) continue;  // j = 0 rotation term
          auto se = summary_entry(type, b, bt);
          if (se.defined && se.value != v)
            failures.push_back({{"check", "summary-mismatch"}, {"src", src}, {"dst", dst},
                                {"assembled", laurent_to_json(v)},
                                {"summary", laurent_to_json(se.value)}});
        }
      }
    }
    // the summaries' omitted low sector really is empty
    if (type.family == Family::B) {
      int n = type.rank;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (a + b >= 1 && R.entry(2 * n - a, a, 2 * n - b, b) && a != b)
            failures.push_back({{"check", "vacuous-sector"}, {"a", a}, {"b", b}});
    }
  } else if (suite == "markov") {
    for (const auto& f : markov_trials(type, samples, seed))
      failures.push_back({{"check", "markov"}, {"detail", f}});
  } else {
    throw CLI::ValidationError("--suite", "unknown suite " + suite);
  }
  return Json{{"suite", suite}, {"family", std::string(1, char(type.family))},
              {"rank", type.rank}, {"ok", failures.empty()}, {"failures", std::move(failures)}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"wall-crossing monodromy matrices, braid-closure invariants and "
               "Yang-Yang critical points"};
  app.require_subcommand(1);

  std::string family = "A";
  int rank = 1;

  auto add_type_flags = [&](CLI::App* cmd) {
    cmd->add_option("--family", family, "Lie family A|B|C|D")->required();
    cmd->add_option("--rank", rank, "rank n")->required();
  };

  auto* cmd_rmatrix = app.add_subcommand("rmatrix", "dump the monodromy matrix entries");
  add_type_flags(cmd_rmatrix);
  std::string format = "json";
  cmd_rmatrix->add_option("--format", format, "output format (json)");

  auto* cmd_tables = app.add_subcommand("tables", "dump weight and root tables");
  add_type_flags(cmd_tables);

  auto* cmd_inv = app.add_subcommand("invariant", "braid closure invariant");
  add_type_flags(cmd_inv);
  std::string braid_text;
  int strands_opt = 0;
  cmd_inv->add_option("--braid", braid_text, "braid word, e.g. \"s1 s2^-1 s1\"")->required();
  cmd_inv->add_option("--strands", strands_opt, "strand count (default: max index + 1)");

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  add_type_flags(cmd_verify);
  std::string suite;
  int samples = 50;
  unsigned seed = 20240817;
  cmd_verify->add_option("--suite", suite, "ybe|eigen|markov|minpoly|blocks")->required();
  cmd_verify->add_option("--samples", samples, "markov sample count");
  cmd_verify->add_option("--seed", seed, "markov RNG seed");

  auto* cmd_crit = app.add_subcommand("critical", "one-point closed-form critical point");
  add_type_flags(cmd_crit);
  std::string l_text, z_text = "0";
  double cval = 1.0;
  cmd_crit->add_option("--l", l_text, "sector label, e.g. 5 or 3p (D_n primed)")->required();
  cmd_crit->add_option("--c", cval, "symmetry breaking constant (> 0)");
  cmd_crit->add_option("--z", z_text, "marked point re[,im]");

  auto* cmd_crit2 = app.add_subcommand("critical2", "two-point c=0 closed-form critical point");
  add_type_flags(cmd_crit2);
  std::string z1_text = "0,0", z2_text = "1,0";
  cmd_crit2->add_option("--z1", z1_text, "first marked point re,im")->required();
  cmd_crit2->add_option("--z2", z2_text, "second marked point re,im")->required();

  std::vector<std::string> argv_store = {"yy"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    LieType type = parse_type(family, rank);
    if (cmd_rmatrix->parsed()) {
      if (format != "json") { err << "unsupported format: " << format << "\n"; return 2; }
      out << rmatrix_to_json(build_monodromy(type)).dump() << "\n";
      return 0;
    }
    if (cmd_tables->parsed()) {
      auto tab = WeightTable::make(type);
      auto rat = [](const Rational& r) { return Json::array({r.num(), r.den()}); };
      auto vec = [&](const std::vector<Rational>& v) {
        Json a = Json::array();
        for (const auto& x : v) a.push_back(rat(x));
        return a;
      };
      Json weights = Json::array(), roots = Json::array(), ips = Json::array();
      for (int o = 0; o < tab.dim(); ++o) weights.push_back(vec(tab.weight(o)));
      for (int i = 1; i <= type.rank; ++i) roots.push_back(vec(tab.root(i)));
      for (int s = 0; s < tab.dim(); ++s) {
        Json row = Json::array();
        for (int u = 0; u < tab.dim(); ++u) row.push_back(rat(tab.weight_ip(s, u)));
        ips.push_back(std::move(row));
      }
      Json order = Json::array();
      for (int o = 0; o < tab.dim(); ++o) order.push_back(weight_index_to_json(tab.index_of(o)));
      out << Json{{"dim", tab.dim()},
                  {"gram_scale", rat(tab.gram_scale())},
                  {"weights", std::move(weights)},
                  {"roots", std::move(roots)},
                  {"weight_inner_products", std::move(ips)},
                  {"order", std::move(order)}}
                 .dump()
          << "\n";
      return 0;
    }
    if (cmd_inv->parsed()) {
      BraidWord beta = parse_braid(braid_text, strands_opt > 0 ? std::optional<int>(strands_opt)
                                                               : std::nullopt);
      out << knot_invariant_to_json(knot_invariant(type, beta)).dump() << "\n";
      return 0;
    }
    if (cmd_verify->parsed()) {
      Json report = run_suite(suite, type, samples, seed);
      out << report.dump() << "\n";
      return report["ok"].get<bool>() ? 0 : 1;
    }
    if (cmd_crit->parsed()) {
      LValue l = parse_l(l_text);
      auto sol = closed_form_one_point(type, l, cval, parse_complex(z_text));
      bool ordering = verify_ordering(type, l, sol);
      out << critical_json(sol, ordering).dump() << "\n";
      return (sol.residual < 1e-9 && ordering) ? 0 : 1;
    }
    if (cmd_crit2->parsed()) {
      Complex z1 = parse_complex(z1_text), z2 = parse_complex(z2_text);
      auto sol = closed_form_two_point_c0(type, z1, z2);
      bool structure = verify_two_point_structure(type, z1, z2, sol);
      out << critical_json(sol, structure).dump() << "\n";
      return (sol.residual < 1e-9 && structure) ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace yy
