#include <doctest.h>

#include "echelons/gabrielov.hpp"
#include "echelons/stdbasis.hpp"

using namespace echelons;

TEST_CASE("minimal relation") {
    auto rel = minimal_relation(Term{Rational(1), {1, 0, 1}}, Term{Rational(1), {0, 1, 1}});
    CHECK(rel.mi.exp == Exponent{0, 1, 0});
    CHECK(rel.mi.coeff.str() == "-1");
    CHECK(rel.mj.exp == Exponent{1, 0, 0});
    CHECK(rel.mj.coeff.str() == "1");

    auto dup = minimal_relation(Term{Rational(1), {2, 0}}, Term{Rational(1), {2, 0}});
    CHECK(dup.mi.coeff.str() == "-1");
    CHECK(dup.mj.coeff.str() == "1");
    CHECK(dup.mi.exp == Exponent{0, 0});

    // zero-sum invariant  m_i e_i x^{a_i} + m_j e_j x^{a_j} = 0
    auto r = minimal_relation(Term{Rational(1, 12), {2, 0, 2}}, Term{Rational(1), {0, 1, 1}});
    auto lhs = add(monomial_mul(Series::monomial(3, 9, {2, 0, 2}, Rational(1, 12)), r.mi),
                   monomial_mul(Series::monomial(3, 9, {0, 1, 1}, Rational(1)), r.mj));
    CHECK(lhs.is_zero());
}

TEST_CASE("s_combination admissibility on the fixed generators") {
    auto ctx = gabrielov::make_context(10);
    auto& F = ctx.presentation.generators;
    auto& o = ctx.presentation.order;

    // relation between 1 and xz needs a z-multiplier on f, outside scope 2
    CHECK(!s_combination(F, o, 0, 1).has_value());
    CHECK(!s_combination(F, o, 0, 2).has_value());

    auto gh = s_combination(F, o, 1, 2);
    REQUIRE(gh);
    CHECK(gh->scope == 2);
    auto expected = add(mul(Series::monomial(3, 10, {0, 1, 0}, Rational(-1)), ctx.g),
                        mul(Series::monomial(3, 10, {1, 0, 0}, Rational(1)), ctx.h));
    CHECK(equal_at_common_prec(gh->series, expected));

    // strict ascent of the initial monomial
    auto in_raw = initial_term(gh->series, o);
    REQUIRE(in_raw);
    CHECK(o.less({1, 1, 1}, in_raw->exp));  // in(m_g g) = y*xz = xyz
}

TEST_CASE("enlarge exits immediately on a covered target") {
    EchelonPresentation p{2,
                          {{Series::monomial(2, 8, {1, 0}, Rational(1)), 2},
                           {Series::monomial(2, 8, {0, 1}, Rational(1)), 2}},
                          MonomialOrder::grlex({0, 1})};
    auto st = enlarge(p, EnlargeTarget{Exponent{1, 1}, std::nullopt}, 100);
    CHECK(st.status == EnlargeStatus::Covered);
    CHECK(st.F.size() == 2);  // xy in K[[x,y]]*x already
    REQUIRE(st.covering_index);
    CHECK(*st.covering_index == 0);
}

TEST_CASE("reduced enlargement finds g_2 for target x^2 z^2") {
    auto ctx = gabrielov::make_context(10);
    auto st = enlarge_reduced(ctx.presentation, EnlargeTarget{Exponent{2, 0, 2}, std::nullopt}, 100);
    CHECK(st.status == EnlargeStatus::Covered);
    REQUIRE(st.F.size() == 4);
    CHECK(st.F[3].scope == 2);
    CHECK(equal_at_common_prec(st.F[3].series, gabrielov::g_closed(2, 10)));
}

TEST_CASE("iterated reduced enlargement reaches x^k z^k for k <= 4") {
    auto ctx = gabrielov::make_context(12);
    for (int k = 2; k <= 4; ++k) {
        auto st = enlarge_reduced(ctx.presentation,
                                  EnlargeTarget{Exponent{k, 0, k}, std::nullopt}, 500);
        REQUIRE(st.status == EnlargeStatus::Covered);
        auto& last = st.F.back();
        auto in_last = initial_term(last.series, ctx.presentation.order);
        REQUIRE(in_last);
        CHECK(in_last->exp == Exponent{k, 0, k});
        // inserted element is a scalar multiple of g_k (the relation
        // normalization differs from the hand computation's)
        auto normalized = scale(last.series, gabrielov::q(k, k) / in_last->coeff);
        CHECK(equal_at_common_prec(normalized, gabrielov::g_closed(k, 12)));
    }
}

TEST_CASE("max_rounds is reported distinctly") {
    auto ctx = gabrielov::make_context(10);
    auto st = enlarge_reduced(ctx.presentation, EnlargeTarget{Exponent{9, 0, 9}, std::nullopt}, 2);
    CHECK(st.status == EnlargeStatus::MaxRounds);
}

TEST_CASE("membership mod degree") {
    auto ctx = gabrielov::make_context(10);
    auto g2 = gabrielov::g_closed(2, 10);
    auto m = membership_mod_degree(g2, ctx.presentation, 6, 500);
    CHECK(m.verdict == MembershipVerdict::Member);

    auto z = Series::monomial(3, 10, {0, 0, 1}, Rational(1));
    auto mz = membership_mod_degree(z, ctx.presentation, 4, 500);
    CHECK(mz.verdict == MembershipVerdict::NonMember);

    auto m0 = membership_mod_degree(Series::zero(3, 10), ctx.presentation, 5, 500);
    CHECK(m0.verdict == MembershipVerdict::Member);

    CHECK_THROWS_AS(membership_mod_degree(z, ctx.presentation, 11, 500), precision_error);
}
