#include <doctest.h>

#include "echelons/gabrielov.hpp"
#include "echelons/json_io.hpp"

using namespace echelons;

TEST_CASE("series round trip") {
    auto g2 = gabrielov::g_closed(2, 9);
    std::vector<std::string> vars = {"x", "y", "z"};
    json j = series_to_json(g2, vars);
    auto back = series_from_json(j);
    CHECK(back.vars == vars);
    CHECK(back.series == g2);
    CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("series schema validation") {
    CHECK_THROWS_AS(series_from_json(json{{"vars", {"x"}}}), schema_error);
    json bad = {{"vars", {"x", "y"}},
                {"prec", 3},
                {"terms", {{{"e", {1, 0}}, {"c", "0"}}}}};
    CHECK_THROWS_AS(series_from_json(bad), schema_error);  // explicit zero coeff
    json overprec = {{"vars", {"x"}}, {"prec", 2}, {"terms", {{{"e", {5}}, {"c", "1"}}}}};
    CHECK_THROWS_AS(series_from_json(overprec), schema_error);
    json dup = {{"vars", {"x"}},
                {"prec", 4},
                {"terms", {{{"e", {1}}, {"c", "1"}}, {{"e", {1}}, {"c", "2"}}}}};
    CHECK_THROWS_AS(series_from_json(dup), schema_error);
}

TEST_CASE("order round trip and validation") {
    std::vector<std::string> vars = {"x", "y", "z"};
    auto o = MonomialOrder::lex({0, 1, 2});
    json j = order_to_json(o, vars);
    CHECK(j["kind"] == "lex");
    CHECK(j["precedence"] == json({"x", "y", "z"}));
    auto back = order_from_json(j, vars);
    CHECK(back.kind == OrderKind::lex);
    CHECK(back.precedence == std::vector<int>{0, 1, 2});

    json notperm = {{"kind", "grlex"}, {"precedence", {"x", "x", "z"}}};
    CHECK_THROWS_AS(order_from_json(notperm, vars), schema_error);
    json badkind = {{"kind", "degrevlex"}, {"precedence", {"x", "y", "z"}}};
    CHECK_THROWS_AS(order_from_json(badkind, vars), schema_error);
}

TEST_CASE("echelon round trip") {
    auto ctx = gabrielov::make_context(8);
    std::vector<std::string> vars = {"x", "y", "z"};
    json j = echelon_to_json(ctx.presentation, vars);
    CHECK(j["prec"] == 8);
    auto back = echelon_from_json(j);
    CHECK(back.vars == vars);
    REQUIRE(back.presentation.generators.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(back.presentation.generators[i].series ==
              ctx.presentation.generators[i].series);
        CHECK(back.presentation.generators[i].scope ==
              ctx.presentation.generators[i].scope);
    }
}

TEST_CASE("division result serialization") {
    auto ctx = gabrielov::make_context(10);
    auto s = add(mul(Series::monomial(3, 10, {0, 1, 0}, Rational(-1)), ctx.g),
                 mul(Series::monomial(3, 10, {1, 0, 0}, Rational(1)), ctx.h));
    auto r = echelon_divide(s, ctx.presentation);
    json j = division_result_to_json(r, {"x", "y", "z"});
    CHECK(j["min_witness"] == json({1, 1, 2}));
    CHECK(j["remainder_scope"] == 2);
    CHECK(j["quotients"].size() == 3);
    auto rem = series_from_json(j["remainder"]);
    CHECK(rem.series == r.remainder);
}

TEST_CASE("enlargement and relation report serialization") {
    auto ctx = gabrielov::make_context(10);
    auto st = enlarge_reduced(ctx.presentation,
                              EnlargeTarget{Exponent{2, 0, 2}, std::nullopt}, 100);
    json j = enlargement_to_json(st, {"x", "y", "z"});
    CHECK(j["status"] == "covered");
    CHECK(j["basis"].size() == 4);
    CHECK(j["trace"].is_array());

    auto rep = oracle_relation_order(ctx.presentation, 5);
    json rj = relation_report_to_json(rep);
    CHECK(rj.contains("kernel_dim"));
    CHECK(rj["artifact_threshold"] == 4);
}
