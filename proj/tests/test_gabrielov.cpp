#include <doctest.h>

#include "echelons/gabrielov.hpp"

using namespace echelons;
namespace gab = echelons::gabrielov;

TEST_CASE("q closed form") {
    CHECK(gab::q(2, 2).str() == "1/12");
    CHECK(gab::q(3, 3).str() == "1/720");
    CHECK(gab::q(4, 4).str() == "1/100800");
    CHECK(gab::q(5, 5).str() == "1/25401600");
    CHECK(gab::q(6, 6).str() == "1/10059033600");
    for (long i = 1; i <= 8; ++i) CHECK(gab::q(i, 1) == factorial(i).inv());
    CHECK_THROWS(gab::q(2, 3));
}

TEST_CASE("bracket tables as relative coefficients") {
    auto rel = [](long i, long k) { return gab::q(i, k) / gab::q(k, k); };
    CHECK(rel(3, 2).str() == "1/2");
    CHECK(rel(4, 2).str() == "3/20");
    CHECK(rel(5, 2).str() == "1/30");
    CHECK(rel(6, 2).str() == "1/168");
    CHECK(rel(7, 2).str() == "1/1120");
    CHECK(rel(4, 3).str() == "1/2");
    CHECK(rel(5, 3).str() == "1/7");
    CHECK(rel(6, 3).str() == "5/168");
    CHECK(rel(7, 3).str() == "5/1008");
    CHECK(rel(5, 4).str() == "1/2");
    CHECK(rel(6, 4).str() == "5/36");
    CHECK(rel(7, 4).str() == "1/36");
    CHECK(rel(6, 5).str() == "1/2");
    CHECK(rel(7, 5).str() == "3/22");
    CHECK(rel(8, 5).str() == "7/264");
    CHECK(rel(7, 6).str() == "1/2");
    CHECK(rel(8, 6).str() == "7/52");
    CHECK(rel(9, 6).str() == "1/39");
}

TEST_CASE("g closed form vs algorithmic") {
    CHECK(equal_at_common_prec(gab::g_closed(1, 9), gab::make_context(9).g));
    for (int k = 2; k <= 5; ++k)
        CHECK(gab::g_algorithmic(k, 12) == gab::g_closed(k, 12));
    auto g6 = gab::g_algorithmic(6, 14);
    auto in6 = initial_term(g6, gab::lex_xyz());
    REQUIRE(in6);
    CHECK(in6->exp == Exponent{6, 0, 6});
    CHECK(in6->coeff.str() == "1/10059033600");
    CHECK_THROWS(gab::g_algorithmic(4, 6));  // needs prec >= 8
}

TEST_CASE("abc initial values and one recursion step") {
    auto t2 = gab::abc(2, 10);
    CHECK(equal_at_common_prec(t2.a, Series::monomial(3, 10, {2, 0, 0}, Rational(1))));
    CHECK(t2.b.coeff({0, 1, 0}).str() == "-1");
    CHECK(t2.b.coeff({1, 0, 0}).str() == "1/2");
    CHECK(t2.b.size() == 2);
    CHECK(t2.c.coeff({1, 0, 0}).str() == "1");   // z^{-1} x (e^z - 1) = x + xz/2 + ...
    CHECK(t2.c.coeff({1, 0, 1}).str() == "1/2");

    auto t3 = gab::abc(3, 10);
    CHECK(equal_at_common_prec(t3.a, Series::monomial(3, 10, {2, 1, 0}, Rational(-1))));
    CHECK(t3.b.coeff({0, 2, 0}).str() == "1");
    CHECK(t3.b.coeff({1, 1, 0}).str() == "-1/2");
    CHECK(t3.b.coeff({2, 0, 0}).str() == "1/12");
    CHECK(t3.b.size() == 3);
}

TEST_CASE("presentation identity a f + b g + c h = g_k") {
    auto ctx = gab::make_context(16);
    auto fam = gab::abc_family(6, 16);
    for (int k = 2; k <= 6; ++k) {
        auto& t = fam[k - 1];
        auto combo = add(add(mul(t.a, ctx.f), mul(t.b, ctx.g)), mul(t.c, ctx.h));
        CHECK(equal_at_common_prec(combo, gab::g_closed(k, 16)));
        // homogeneity of a_k (degree k) and b_k (degree k-1), in x and y only
        for (auto& [e, c] : t.a.terms()) {
            CHECK(total_degree(e) == k);
            CHECK(e[2] == 0);
        }
        for (auto& [e, c] : t.b.terms()) {
            CHECK(total_degree(e) == k - 1);
            CHECK(e[2] == 0);
        }
    }
}

TEST_CASE("ratio law") {
    for (long k = 1; k <= 20; ++k) {
        Rational expect(1, 4 * (2 * k + 1) * (2 * k - 1));
        CHECK(gab::ratio_check(k) == expect);
    }
    CHECK(gab::ratio_check(1).str() == "1/12");
    CHECK(gab::ratio_check(4).str() == "1/252");
}

TEST_CASE("e series") {
    auto e = gab::e_combination(8, 16);
    for (int k = 2; k <= 8; ++k) {
        Exponent diag = {k, 0, k};
        CHECK(e.coeff(diag).str() == "1");
    }
    CHECK(e.coeff({5, 0, 7}).str() == "3/22");
    Rational one(1);
    for (auto& [exp, c] : e.terms()) {
        CHECK(!(one < c.abs()));
        if (c.abs() == one) CHECK(exp[0] == exp[2]);
    }

    auto eo = gab::e_original(8);
    CHECK(eo.coeff({1, 0, 1}).str() == "1");
    CHECK(eo.coeff({2, 0, 3}).str() == "1/12");  // 2!/4!
    CHECK(eo.coeff({1, 0, 3}).str() == "1/6");   // 1!/3!
    for (auto& [exp, c] : eo.terms()) {
        CHECK(exp[1] == 0);
        CHECK(exp[0] >= 1);
        CHECK(exp[2] >= 1);
    }
}

TEST_CASE("divergence report") {
    auto rep = gab::divergence_report(8, 20);
    CHECK(rep.super_geometric);
    REQUIRE(!rep.rows.empty());
    CHECK(rep.rows.front().k == 2);
    CHECK(rep.rows.front().r.str() == "12");
    CHECK(rep.rows.front().ratio.str() == "60");  // r_3/r_2 = 720/12
    for (auto& row : rep.rows) {
        CHECK(row.a_ray_coeff.abs() == row.r);
        CHECK(row.b_ray_coeff.abs() == row.r);
        CHECK(row.c_ray_coeff.abs() == row.r);
        CHECK(row.ratio == row.ratio_formula);
        if (row.k >= 8) CHECK(Rational(1000) < row.ratio);
    }
}
