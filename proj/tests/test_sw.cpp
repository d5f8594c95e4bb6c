#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "swforge/alexander.hpp"
#include "swforge/laurent_io.hpp"
#include "swforge/sw_calculus.hpp"

using namespace swforge;

namespace {

LaurentPoly P(const char* text) { return parse_poly(text, VarSet{"t"}); }
LaurentPoly alex(const char* presentation) { return alexander(parse_presentation(presentation)); }

const char* const kCorpus[] = {"U",      "T(2,3)", "K(5/3)",  "T(2,5)",   "T(2,7)",   "T(3,4)",
                               "T(3,5)", "K(7/3)", "K(105/64)", "K(105/76)", "B(3: 1 1 1 2 -1 2)"};

}  // namespace

TEST_CASE("ManifoldMeta invariants") {
  CHECK_NOTHROW(ManifoldMeta(24, -16, 3, true, true));
  CHECK_THROWS_AS(ManifoldMeta(24, -15, 3, true, true), DomainError);
  CHECK_THROWS_AS(ManifoldMeta(24, -16, 5, true, true), DomainError);
  CHECK_THROWS_AS(ManifoldMeta(24, -16, -1, false, true), DomainError);
  CHECK_NOTHROW(ManifoldMeta(24, -16, 5, false, true));
  CHECK(ManifoldMeta(36, -24, 5, true, false).symmetry_sign() == -1);
}

TEST_CASE("E(n) coefficients are signed binomials") {
  for (int n = 2; n <= 12; ++n) {
    CAPTURE(n);
    const auto x = sw_en(n);
    CHECK(x.meta() == ManifoldMeta(12 * n, -8 * n, 2 * n - 1, true, n % 2 == 0));
    CHECK(x.poly().terms().size() == static_cast<std::size_t>(n - 1));
    for (int m = 1; m <= n - 1; ++m) {
      const Integer expected = (m % 2 == 1 ? 1 : -1) * oracle::binomial(n - 2, m - 1);
      CHECK(x.poly().coefficient(Monomial{{2 * (n - 2 * m)}}) == expected);
    }
    CHECK(check_symmetry(x));
  }
  CHECK(sw_en(2).poly() == LaurentPoly::constant(1).extend_vars(VarSet{"tF"}));
  CHECK(sw_en(3).poly() == parse_poly("tF - tF^-1"));
  CHECK_THROWS_AS(sw_en(1), DomainError);
}

TEST_CASE("symmetry law rejects corrupted polynomials") {
  const auto meta = sw_en(4).meta();
  auto corrupted = sw_en(4).poly() + parse_poly("tF");
  CHECK_FALSE(check_symmetry(meta, corrupted));
  CHECK_THROWS_AS(SWInvariant(meta, corrupted), DomainError);
  CHECK_FALSE(check_symmetry(sw_en(3).meta(), parse_poly("tF + tF^-1")));
  CHECK(check_symmetry(sw_en(3).meta(), parse_poly("tF - tF^-1")));
}

TEST_CASE("knot surgery on K3") {
  const auto x = knot_surgery(sw_en(2), alex("T(2,3)"), "tT");
  CHECK(x.poly() == parse_poly("tT^2 - 1 + tT^-2", VarSet{"tF", "tT"}));
  CHECK(check_symmetry(x));
  CHECK(basic_classes(x).count_mod_negation == 2);
  CHECK(basic_classes(x).classes.size() == 3);

  const auto unchanged = knot_surgery(sw_en(2), alex("U"), "tT");
  CHECK(unchanged == sw_en(2));
  CHECK(knot_surgery(sw_en(5), P("1"), "tT") == sw_en(5));
}

TEST_CASE("knot surgery on E(n)") {
  const auto x = knot_surgery(sw_en(3), alex("T(2,3)"), "tT");
  CHECK(x.poly() == parse_poly("tF - tF^-1", VarSet{"tF", "tT"}) * parse_poly("tT^2 - 1 + tT^-2", VarSet{"tF", "tT"}));
  CHECK(basic_classes(x).count_mod_negation == 3);
  SUBCASE("b+ must exceed one") {
    const SWInvariant small(ManifoldMeta(8, 0, 1, false, false), LaurentPoly::constant(1));
    CHECK_THROWS_AS(knot_surgery(small, alex("T(2,3)"), "tT"), DomainError);
  }
  SUBCASE("delta must be an A-polynomial") {
    CHECK_THROWS_AS(knot_surgery(sw_en(2), P("t + 1 + t^-1"), "tT"), DomainError);
    CHECK_THROWS_AS(knot_surgery(sw_en(2), P("t^2 - t + 1"), "tT"), DomainError);
  }
}

TEST_CASE("surgery outputs satisfy the symmetry law across the corpus") {
  for (int n = 2; n <= 5; ++n) {
    for (const char* k : kCorpus) {
      CAPTURE(n);
      CAPTURE(k);
      const auto d = alex(k);
      CHECK(check_symmetry(knot_surgery(sw_en(n), d, "tT")));
      CHECK(check_symmetry(rim_surgery(sw_en(n), d)));
      CHECK(rim_surgery(sw_en(n), d).poly().vars().contains("r") == !d.is_constant());
    }
  }
}

TEST_CASE("composition law") {
  const auto d1 = alex("T(2,3)");
  const auto d2 = alex("K(5/3)");
  const auto twice = knot_surgery(knot_surgery(sw_en(3), d1, "tT"), d2, "tT");
  const auto once = knot_surgery(sw_en(3), d1 * d2, "tT");
  CHECK(twice == once);

  const auto two_tori = knot_surgery(knot_surgery(sw_en(2), d1, "tT"), d2, "tS");
  CHECK(two_tori.poly().vars() == VarSet{"tF", "tS", "tT"});
  CHECK(basic_classes(two_tori).count_mod_negation == 5);
}

TEST_CASE("rim surgery distinguishes surfaces by their Alexander polynomials") {
  CHECK(distinguish_surfaces(alex("T(2,3)"), alex("K(5/3)")) == SurfaceVerdict::distinguished);
  CHECK(distinguish_surfaces(alex("K(105/64)"), alex("K(105/76)")) == SurfaceVerdict::inconclusive);
  CHECK(distinguish_surfaces(LaurentPoly::constant(1), alex("U")) == SurfaceVerdict::inconclusive);
  CHECK(std::string(to_string(SurfaceVerdict::distinguished)) == "distinguished");
}

TEST_CASE("Gromov-Taubes knot surgery") {
  const auto gr = LaurentPoly::constant(1);
  CHECK(gromov_knot_surgery(gr, alex("T(2,3)"), "tT") == parse_poly("tT^2 - tT + 1"));
  CHECK(gromov_knot_surgery(gr, alex("U"), "tT") == gr);
  CHECK_THROWS_AS(gromov_knot_surgery(gr, alex("K(7/3)"), "tT"), DomainError);
  const auto fiber = parse_poly("tF^2 + 1");
  CHECK(gromov_knot_surgery(fiber, alex("T(2,3)"), "tT") ==
        parse_poly("tF^2 + 1", VarSet{"tF", "tT"}) * parse_poly("tT^2 - tT + 1", VarSet{"tF", "tT"}));
}

TEST_CASE("symplectic obstruction") {
  CHECK(symplectic_obstruction(P("2*t - 3 + 2*t^-1")) == SymplecticVerdict::obstructed);
  CHECK(symplectic_obstruction(alex("K(105/64)")) == SymplecticVerdict::no_verdict);
  CHECK(symplectic_obstruction(alex("T(3,5)")) == SymplecticVerdict::no_verdict);
}

TEST_CASE("link surgery") {
  const ManifoldMeta meta(24, -16, 3, true, true);
  const auto hopf = parse_poly("1", VarSet{"t1", "t2"});
  CHECK(link_surgery_sw(hopf, meta).poly() == hopf);
  CHECK_THROWS_AS(link_surgery_sw(parse_poly("t1 + t2"), meta), DomainError);
}

TEST_CASE("cover formula vanishes at the all-ones point") {
  CHECK(cover_sw(LaurentPoly::constant(1), 1) == parse_poly("t1^(1/2) - t1^(-1/2)"));
  CHECK(cover_sw(LaurentPoly::constant(1), 2).vars() == VarSet{"t1", "t2"});
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int alpha = 1 + static_cast<int>(rng() % 5);
    std::vector<std::string> names;
    for (int j = 1; j <= alpha; ++j) names.push_back("t" + std::to_string(j));
    const VarSet vars(names);
    TermMap terms;
    for (int k = 0; k < 4; ++k) {
      Monomial m{std::vector<std::int32_t>(alpha)};
      for (auto& e : m.exps2) e = static_cast<std::int32_t>(rng() % 7) * 2 - 6;
      terms[m] += static_cast<int>(rng() % 11) - 5;
    }
    const LaurentPoly d(vars, terms);
    const auto c = cover_sw(d, alpha);
    std::map<std::string, Rational> ones;
    for (const auto& n : names) ones[n] = 1;
    CHECK(evaluate(c, ones) == 0);
    // the factors are exact
    LaurentPoly rest = c;
    for (const auto& n : names) rest = exact_div(rest, parse_poly((n + "^(1/2) - " + n + "^(-1/2)").c_str(), vars));
    CHECK(rest == d);
  }
  CHECK_THROWS_AS(cover_sw(parse_poly("t1 + t2"), 3), DomainError);
  CHECK_THROWS_AS(cover_sw(LaurentPoly::constant(1), 0), DomainError);
}

TEST_CASE("pair product evaluates to the determinant") {
  // up to sign: Delta(-1) = -3 for the trefoil
  CHECK(evaluate(pair_product_sw(alex("T(2,3)")), {{"t", 1}}) == -3);
  CHECK(evaluate(pair_product_sw(alex("K(5/3)")), {{"t", 1}}) == 5);
  CHECK(evaluate(pair_product_sw(alex("K(105/64)")), {{"t", 1}}) == 105);
  CHECK(pair_product_sw(alex("T(2,3)")) == P("-t^2 - t^-2 - 1"));
  CHECK(pair_product_sw(LaurentPoly::constant(1)) == LaurentPoly::constant(1));
  CHECK_THROWS_AS(pair_product_sw(P("t^(1/2) - t^(-1/2)")), DomainError);
  // same value term by term on the printed coefficients
  const oracle::Dense d{{-8, 1}, {-6, -5}, {-4, 13}, {-2, -21}, {0, 25}, {2, -21}, {4, 13}, {6, -5}, {8, 1}};
  CHECK(oracle::value_at(d, 1) * oracle::value_at(d, -1) == 105);
}

TEST_CASE("Z_k analysis") {
  const auto r = z_k_analysis(alex("K(105/64)"), 4);
  CHECK(r.maximal_degree);
  CHECK(r.basic_class_count == 1);
  CHECK(r.top_magnitude == Integer(1));
  CHECK(r.nonsymplectic == false);
  CHECK(to_json(r)["symplectic_verdict"] == "no_conclusion");

  const auto bad = z_k_analysis(P("2*t - 3 + 2*t^-1"), 1);
  CHECK(bad.maximal_degree);
  CHECK(bad.top_magnitude == Integer(2));
  CHECK(bad.nonsymplectic == true);
  CHECK(to_json(bad)["symplectic_verdict"] == "nonsymplectic");

  const auto quiet = z_k_analysis(alex("K(105/64)"), 6);
  CHECK_FALSE(quiet.maximal_degree);
  CHECK_FALSE(quiet.nonsymplectic.has_value());
  CHECK(to_json(quiet)["symplectic_verdict"] == "silent");

  CHECK_THROWS_AS(z_k_analysis(alex("K(105/64)"), 3), DomainError);
  CHECK_THROWS_AS(z_k_analysis(alex("K(105/64)"), 0), DomainError);
}

TEST_CASE("SW JSON round-trip") {
  for (int n = 2; n <= 6; ++n) {
    const auto x = knot_surgery(sw_en(n), alex("T(2,5)"), "tT");
    CHECK(sw_from_json(to_json(x)) == x);
  }
  auto j = to_json(sw_en(3));
  j["meta"]["e"] = 35;
  CHECK_THROWS_AS(sw_from_json(j), DomainError);
  j = to_json(sw_en(3));
  j.erase("meta");
  CHECK_THROWS_AS(sw_from_json(j), DomainError);
}
