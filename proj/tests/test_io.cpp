#include "doctest.h"

#include "acolen/literal.hpp"
#include "acolen/report.hpp"

#include <random>

using namespace acolen;

TEST_CASE("ideal literal parsing") {
    auto I = parse_ideal_literal("x1^3, x1*x2, x2^2");
    CHECK(I == MonomialIdeal::normalize({{3, 0}, {1, 1}, {0, 2}}, 2));
    CHECK(parse_ideal_literal("x1 x2, x1^2") == MonomialIdeal::normalize({{1, 1}, {2, 0}}, 2));
    CHECK(parse_ideal_literal("1", 2).is_unit());
    CHECK(parse_ideal_literal("0", 2).is_zero());
    CHECK(parse_ideal_literal("x1, x3").dim() == 3);
    CHECK(parse_ideal_literal("x2^2", 3).dim() == 3);

    CHECK_THROWS_AS(parse_ideal_literal(""), parse_error);
    CHECK_THROWS_AS(parse_ideal_literal("x1^^2"), parse_error);
    CHECK_THROWS_AS(parse_ideal_literal("y1"), parse_error);
    CHECK_THROWS_AS(parse_ideal_literal("x1,,x2"), parse_error);
    CHECK_THROWS_AS(parse_ideal_literal("x0"), parse_error);
    CHECK_THROWS_AS(parse_ideal_literal("x3", 2), parse_error);
    try {
        parse_ideal_literal("x1^a");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position == 3);
    }
}

TEST_CASE("literal round trip re-normalizes") {
    std::mt19937 rng(501);
    std::uniform_int_distribution<Int> ex(0, 5);
    for (int t = 0; t < 100; ++t) {
        int d = 2 + t % 3;
        std::vector<Exponents> gens;
        for (int k = 0; k < 4; ++k) {
            Exponents e(static_cast<size_t>(d));
            for (auto& v : e) v = ex(rng);
            gens.push_back(e);
        }
        auto I = MonomialIdeal::normalize(gens, d);
        CHECK(parse_ideal_literal(ideal_to_literal(I), d) == I);
        CHECK(ideal_from_json(ideal_to_json(I)) == I);
    }
}

TEST_CASE("family JSON round trip") {
    std::string text = R"({"index":"p-power","p":2,"kind":"generalized_bracket",)"
                       R"("ideal":{"d":2,"gens":[[1,0],[0,1]]}})";
    FamilySpec s = family_from_json(text);
    CHECK(s.index == IndexKind::p_power);
    CHECK(s.p == 2);
    CHECK(s.kind == FamilyKind::generalized_bracket);
    FamilyEvaluator F(s);
    CHECK(F.evaluate(4) == bracket_power(MonomialIdeal::maximal(2), 4));

    FamilySpec round = family_from_json(family_to_json(s));
    CHECK(round.kind == s.kind);
    CHECK(round.p == s.p);
    CHECK(round.ideal == s.ideal);

    // nested composite
    std::string nested = R"({"kind":"product_of",)"
                         R"("base":{"kind":"powers","ideal":{"d":2,"gens":[[1,0],[0,1]]}},)"
                         R"("other":{"kind":"floor_power","alpha":"3/2",)"
                         R"("ideal":{"d":2,"gens":[[1,0],[0,1]]}}})";
    FamilySpec ns = family_from_json(nested);
    FamilyEvaluator N(ns);
    CHECK(N.evaluate(4) == power(MonomialIdeal::maximal(2), 10));  // 4 + floor(6)
    FamilySpec ns2 = family_from_json(family_to_json(ns));
    FamilyEvaluator N2(ns2);
    CHECK(N2.evaluate(4) == N.evaluate(4));

    CHECK_THROWS_AS(family_from_json("{\"kind\":\"powers\"}"), input_error);
    CHECK_THROWS_AS(family_from_json("{\"kind\":\"mystery\",\"ideal\":{\"d\":1,\"gens\":[]}}"),
                    input_error);
    CHECK_THROWS_AS(family_from_json("not json"), input_error);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/2") == BigRat(3, 2));
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("141421356/100000000") == BigRat(141421356, 100000000));
    CHECK_THROWS_AS(parse_rational("1/0"), input_error);
    CHECK_THROWS_AS(parse_rational("x"), input_error);
}

TEST_CASE("sequence emission") {
    std::vector<SequencePoint> seq{{2, BigInt(3), BigRat(3, 4)}, {3, BigInt(6), BigRat(6, 9)}};
    std::string csv = emit_sequence_csv(seq);
    CHECK(csv == "index,colength,a_n_num,a_n_den\n2,3,3,4\n3,6,2,3\n");
    std::string json_out = emit_sequence_json(seq);
    CHECK(json_out.find("\"decimal\": \"0.750000000000\"") != std::string::npos);
    std::string text = emit_sequence_text(seq);
    CHECK(text.find("colength") != std::string::npos);
}

TEST_CASE("report emission has stable key order") {
    VerifyReport rep;
    rep.claim = "demo";
    rep.witness_range = "n up to 4";
    rep.lhs = BigRat(1, 2);
    rep.rhs = BigRat(1, 2);
    rep.tolerance = 1e-3;
    rep.pass = true;
    std::string j = emit_report_json(rep);
    size_t claim = j.find("\"claim\"");
    size_t range = j.find("\"witness_range\"");
    size_t lhs = j.find("\"lhs\"");
    size_t pass = j.find("\"pass\"");
    CHECK(claim < range);
    CHECK(range < lhs);
    CHECK(lhs < pass);
    CHECK(emit_report_text(rep).rfind("PASS", 0) == 0);
}

TEST_CASE("decimal rendering") {
    CHECK(decimal_string(BigRat(1, 2)) == "0.500000000000");
    CHECK(decimal_string(BigRat(-1, 3)) == "-0.333333333333");
    CHECK(decimal_string(BigRat(2, 3)) == "0.666666666667");
    CHECK(decimal_string(BigRat(4, 21)) == "0.190476190476");
}
