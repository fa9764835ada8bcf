#include <doctest.h>

#include <random>

#include "echelons/gabrielov.hpp"
#include "echelons/order.hpp"

using namespace echelons;

TEST_CASE("lex comparisons x>y>z") {
    auto lex = MonomialOrder::lex({0, 1, 2});
    CHECK(lex.compare({0, 1, 1}, {1, 0, 0}) == Ordering::Less);   // yz < x
    CHECK(lex.compare({1, 0, 1}, {1, 0, 2}) == Ordering::Less);   // xz < xz^2
    CHECK(lex.compare({2, 1, 0}, {2, 1, 0}) == Ordering::Equal);
    CHECK(lex.compare({1, 0, 0}, {0, 1, 1}) == Ordering::Greater);
}

TEST_CASE("grlex comparisons") {
    auto grlex = MonomialOrder::grlex({0, 1, 2});
    CHECK(grlex.compare({0, 1, 1}, {1, 0, 0}) == Ordering::Greater);  // degree wins
    // equal degree: plain lex tie-break on precedence-ordered components
    CHECK(grlex.compare({0, 1, 0}, {1, 0, 0}) == Ordering::Less);
    CHECK(grlex.compare({2, 0, 0}, {1, 1, 0}) == Ordering::Greater);
}

TEST_CASE("sharp classification") {
    CHECK(MonomialOrder::grlex({0, 1}).satisfies_sharp());
    CHECK(!MonomialOrder::lex({0, 1}).satisfies_sharp());
    CHECK(!MonomialOrder::lex({0}).satisfies_sharp());  // conservative in 1 var
}

TEST_CASE("initial terms of the fixed generators") {
    auto ctx = gabrielov::make_context(10);
    auto lex = gabrielov::lex_xyz();
    auto inf = initial_term(ctx.f, lex);
    REQUIRE(inf);
    CHECK(inf->exp == Exponent{0, 0, 0});
    auto ing = initial_term(ctx.g, lex);
    REQUIRE(ing);
    CHECK(ing->exp == Exponent{1, 0, 1});
    auto inh = initial_term(ctx.h, lex);
    REQUIRE(inh);
    CHECK(inh->exp == Exponent{0, 1, 1});
    CHECK(!initial_term(Series::zero(3, 5), lex).has_value());
    auto ing2 = initial_term(gabrielov::g_closed(2, 9), lex);
    REQUIRE(ing2);
    CHECK(ing2->exp == Exponent{2, 0, 2});
    CHECK(ing2->coeff.str() == "1/12");
}

TEST_CASE("order properties on random pairs") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> expo(0, 4);
    for (auto kind : {OrderKind::lex, OrderKind::grlex}) {
        MonomialOrder o{kind, {1, 0, 2}};
        for (int t = 0; t < 200; ++t) {
            Exponent a(3), b(3), c(3);
            for (int v = 0; v < 3; ++v) {
                a[v] = expo(rng);
                b[v] = expo(rng);
                c[v] = expo(rng);
            }
            auto ab = o.compare(a, b);
            auto ba = o.compare(b, a);
            CHECK((ab == Ordering::Equal) == (a == b));
            if (ab == Ordering::Less) CHECK(ba == Ordering::Greater);
            if (ab == Ordering::Less)
                CHECK(o.compare(exp_add(a, c), exp_add(b, c)) == Ordering::Less);
            Exponent zero(3, 0);
            if (a != zero) CHECK(o.compare(zero, a) == Ordering::Less);
        }
    }
}
