#include <doctest.h>

#include "echelons/echelon.hpp"
#include "echelons/gabrielov.hpp"

using namespace echelons;

TEST_CASE("partition of the fixed three-generator echelon") {
    auto ctx = gabrielov::make_context(10);
    auto rp = build_partition(ctx.presentation);
    REQUIRE(rp.slices.size() == 3);
    // decreasing-scope stable order: h (scope 3), then f, g (scope 2)
    CHECK(rp.slices[0].owner == 2);
    CHECK(rp.slices[0].base == Exponent{0, 1, 1});
    CHECK(rp.slices[1].owner == 0);
    CHECK(rp.slices[1].base == Exponent{0, 0, 0});
    CHECK(rp.slices[2].owner == 1);
    CHECK(rp.slices[2].base == Exponent{1, 0, 1});

    CHECK(rp.classify({2, 0, 2}) == kComplement);
    CHECK(rp.slices[rp.classify({0, 0, 0})].owner == 0);
    CHECK(rp.slices[rp.classify({1, 1, 3})].owner == 2);
    CHECK(rp.slices[rp.classify({4, 2, 0})].owner == 0);   // z = 0
    CHECK(rp.slices[rp.classify({3, 0, 1})].owner == 1);   // x>=1, y=0, z=1
    CHECK(rp.classify({0, 0, 3}) == kComplement);
    CHECK(rp.classify({1, 0, 2}) == kComplement);

    // exhaustive check to degree 6: slices partition exactly the union of
    // translates, first three slice descriptions: A_h={y>=1,z>=1},
    // A_f={z=0}, A_g={x>=1,y=0,z=1}
    for (auto& e : exponents_up_to_degree(3, 6)) {
        int cls = rp.classify(e);
        if (e[1] >= 1 && e[2] >= 1) {
            CHECK(rp.slices[cls].owner == 2);
        } else if (e[2] == 0) {
            CHECK(rp.slices[cls].owner == 0);
        } else if (e[0] >= 1 && e[1] == 0 && e[2] == 1) {
            CHECK(rp.slices[cls].owner == 1);
        } else {
            CHECK(cls == kComplement);
        }
    }
}

TEST_CASE("single full-scope unit generator covers everything") {
    EchelonPresentation p{2,
                          {{Series::constant(2, 6, Rational(1)), 2}},
                          MonomialOrder::grlex({0, 1})};
    auto rp = build_partition(p);
    for (auto& e : exponents_up_to_degree(2, 6)) CHECK(rp.classify(e) == 0);
}

TEST_CASE("duplicate monomial generator yields an empty second slice") {
    auto x2 = Series::monomial(2, 6, {2, 0}, Rational(1));
    EchelonPresentation p{2, {{x2, 1}, {x2, 1}}, MonomialOrder::grlex({0, 1})};
    auto rp = build_partition(p);
    for (auto& e : exponents_up_to_degree(2, 6)) {
        int cls = rp.classify(e);
        CHECK(cls != 1);  // second slice is the first minus itself
        if (e[0] >= 2)
            CHECK(rp.slices[cls].owner == 0);
        else
            CHECK(cls == kComplement);
    }
}

TEST_CASE("validate rejects degenerate presentations") {
    EchelonPresentation empty{2, {}, MonomialOrder::grlex({0, 1})};
    CHECK_THROWS_AS(validate(empty), degenerate_input_error);
    EchelonPresentation zerogen{2,
                                {{Series::zero(2, 5), 1}},
                                MonomialOrder::grlex({0, 1})};
    CHECK_THROWS_AS(validate(zerogen), degenerate_input_error);
    EchelonPresentation badscope{2,
                                 {{Series::constant(2, 5, Rational(1)), 3}},
                                 MonomialOrder::grlex({0, 1})};
    CHECK_THROWS_AS(validate(badscope), degenerate_input_error);
}

TEST_CASE("initial region to degree") {
    auto ctx = gabrielov::make_context(12);
    std::vector<ScopedGenerator> basis = ctx.presentation.generators;
    for (int k = 2; k <= 4; ++k)
        basis.push_back({gabrielov::g_closed(k, 12), 2});
    auto region = initial_region_to_degree(basis, ctx.presentation.order, 3, 8);

    std::set<Exponent> expected;
    for (auto& e : exponents_up_to_degree(3, 8)) {
        bool in = (e[2] == 0) || (e[1] >= 1 && e[2] >= 1);
        for (int k = 1; k <= 4 && !in; ++k)
            in = (e[0] >= k && e[1] == 0 && e[2] == k);
        if (in) expected.insert(e);
    }
    CHECK(region == expected);

    CHECK(initial_region_to_degree({}, ctx.presentation.order, 3, 5).empty());
    std::vector<ScopedGenerator> unit = {{Series::constant(3, 8, Rational(1)), 3}};
    auto all = initial_region_to_degree(unit, ctx.presentation.order, 3, 4);
    CHECK(all.size() == exponents_up_to_degree(3, 4).size());
}
