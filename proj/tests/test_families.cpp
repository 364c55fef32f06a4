#include "doctest.h"

#include "acolen/families.hpp"
#include "acolen/newton.hpp"

#include <random>

using namespace acolen;

namespace {

MonomialIdeal ideal(std::vector<Exponents> g, int d) { return MonomialIdeal::normalize(std::move(g), d); }

MonomialIdeal random_m_primary(std::mt19937& rng, int d, Int max_exp, int extra_gens) {
    std::uniform_int_distribution<Int> ex(1, max_exp);
    std::vector<Exponents> g;
    for (int i = 0; i < d; ++i) {
        Exponents e(static_cast<size_t>(d), 0);
        e[static_cast<size_t>(i)] = ex(rng);
        g.push_back(e);
    }
    std::uniform_int_distribution<Int> ex0(0, max_exp);
    for (int k = 0; k < extra_gens; ++k) {
        Exponents e(static_cast<size_t>(d));
        for (auto& v : e) v = ex0(rng);
        g.push_back(e);
    }
    return MonomialIdeal::normalize(std::move(g), d);
}

}  // namespace

TEST_CASE("evaluate across family kinds") {
    auto m = MonomialIdeal::maximal(2);
    FamilyEvaluator powers(FamilySpec::powers_of(m));
    CHECK(powers.evaluate(3) == power(m, 3));
    CHECK(powers.evaluate(0).is_unit());

    FamilyEvaluator gb(FamilySpec::generalized_bracket_of(m, 2));
    CHECK(gb.evaluate(3) == ideal({{3, 0}, {2, 1}, {1, 2}, {0, 3}}, 2));

    // alpha stored exactly; floor(5 * 1.41421356) = 7
    FamilyEvaluator fp(FamilySpec::floor_power_of(m, BigRat(141421356, 100000000)));
    CHECK(fp.evaluate(5) == power(m, 7));

    FamilyEvaluator br(FamilySpec::bracket_of(m, 2));
    CHECK(br.evaluate(8) == ideal({{8, 0}, {0, 8}}, 2));
    CHECK_THROWS_AS(br.evaluate(6), input_error);

    FamilyEvaluator cl(FamilySpec::closure_family(FamilySpec::powers_of(ideal({{2, 0}, {0, 2}}, 2))));
    CHECK(cl.evaluate(1) == ideal({{2, 0}, {1, 1}, {0, 2}}, 2));

    FamilyEvaluator co(FamilySpec::colon_family(FamilySpec::powers_of(m), ideal({{1, 0}}, 2)));
    CHECK(co.evaluate(2) == colon(power(m, 2), ideal({{1, 0}}, 2)));

    FamilyEvaluator pr(FamilySpec::product_family(FamilySpec::powers_of(m), FamilySpec::powers_of(m)));
    CHECK(pr.evaluate(2) == power(m, 4));

    CHECK_THROWS_AS(FamilySpec::product_family(FamilySpec::powers_of(m),
                                               FamilySpec::powers_of(MonomialIdeal::maximal(3))),
                    input_error);
}

TEST_CASE("cache transparency") {
    std::mt19937 rng(211);
    auto I = random_m_primary(rng, 2, 4, 2);
    FamilyEvaluator F(FamilySpec::closure_family(FamilySpec::powers_of(I)));
    for (Int n = 1; n <= 8; ++n) CHECK(F.evaluate(n) == F.evaluate_uncached(n));
    for (Int n = 8; n >= 1; --n) CHECK(F.evaluate(n) == F.evaluate_uncached(n));
}

TEST_CASE("verify_graded_up_to") {
    auto m = MonomialIdeal::maximal(2);
    FamilyEvaluator powers(FamilySpec::powers_of(ideal({{2, 1}, {0, 3}}, 2)));
    CHECK(verify_graded_up_to(powers, 20).ok);

    // I_2 = m^3 breaks gradedness at (1,1)
    std::vector<MonomialIdeal> list{m, power(m, 3), power(m, 3), power(m, 4)};
    FamilyEvaluator bad(FamilySpec::explicit_family(list, IndexKind::natural));
    auto cex = verify_graded_up_to(bad, 4);
    CHECK_FALSE(cex.ok);
    CHECK(cex.m == 1);
    CHECK(cex.n == 1);

    // {m^[n]} is inverse graded (carrying law), not graded: m*m = m^2 is not
    // inside m^[2]
    FamilyEvaluator gb(FamilySpec::generalized_bracket_of(m, 2));
    auto gex = verify_graded_up_to(gb, 8);
    CHECK_FALSE(gex.ok);
    CHECK(gex.m == 1);
    CHECK(gex.n == 1);
}

TEST_CASE("weakly graded witnesses") {
    auto m = MonomialIdeal::maximal(2);
    FamilyEvaluator powers(FamilySpec::powers_of(m));
    auto w = find_weakly_graded_witness(powers, 12, 2);
    CHECK(w.found);
    CHECK(total_degree(w.witness) == 0);  // unit works for an honest graded family

    FamilyEvaluator fp(FamilySpec::floor_power_of(m, BigRat(3, 2)));
    auto wf = find_weakly_graded_witness(fp, 12, 2);
    CHECK(wf.found);
    CHECK(total_degree(wf.witness) <= 1);

    FamilyEvaluator co(FamilySpec::colon_family(FamilySpec::powers_of(power(m, 2)), ideal({{1, 0}}, 2)));
    auto wc = find_weakly_graded_witness(co, 12, 2);
    CHECK(wc.found);
}

TEST_CASE("p-family, inverse p-family, F-graded checks") {
    auto m = MonomialIdeal::maximal(2);
    FamilyEvaluator br(FamilySpec::bracket_of(m, 2));
    CHECK(verify_p_family_up_to(br, 4).ok);
    CHECK(verify_inverse_p_family_up_to(br, 4).ok);
    CHECK(verify_F_graded_up_to(br, 4).ok);
    CHECK(find_weakly_p_witness(br, 4, 1).found);
    CHECK(find_weakly_inverse_p_witness(br, 4, 1).found);

    // constructed counterexample: I_2 too small for an inverse p-family
    std::vector<MonomialIdeal> list{m, power(bracket_power(m, 2), 3), bracket_power(m, 4),
                                    bracket_power(m, 8)};
    FamilyEvaluator bad(FamilySpec::explicit_family(list, IndexKind::p_power, 2));
    CHECK_FALSE(verify_inverse_p_family_up_to(bad, 3).ok);
    auto wi = find_weakly_inverse_p_witness(bad, 3, 1);
    CHECK_FALSE(wi.found);  // exhausted up to the degree bound
}

TEST_CASE("find_bbl_constant") {
    auto m = MonomialIdeal::maximal(2);
    FamilyEvaluator powers(FamilySpec::powers_of(m));
    auto r = find_bbl_constant(powers, 20);
    CHECK(r.found);
    CHECK(r.c == 1);

    FamilyEvaluator gb(FamilySpec::generalized_bracket_of(m, 2));
    auto r2 = find_bbl_constant(gb, 32);
    CHECK(r2.found);
    CHECK(r2.c == 2);

    // threshold grows quadratically: no linear constant
    FamilyEvaluator quad(FamilySpec::custom_family(
        [](Int n) { return MonomialIdeal::normalize({{n * n, 0}, {0, 1}}, 2); }, 2,
        IndexKind::natural));
    auto r3 = find_bbl_constant(quad, 24);
    CHECK(r3.found);
    CHECK(r3.unbounded_trend);

    FamilyEvaluator notmp(FamilySpec::custom_family(
        [](Int n) { return MonomialIdeal::normalize({{n, 0}}, 2); }, 2, IndexKind::natural));
    auto r4 = find_bbl_constant(notmp, 8);
    CHECK_FALSE(r4.found);
    CHECK(r4.bad_index == 1);

    // every graded family with m-primary I_1 is BBL on the window
    std::mt19937 rng(223);
    for (int t = 0; t < 10; ++t) {
        FamilyEvaluator F(FamilySpec::powers_of(random_m_primary(rng, 2, 4, 2)));
        CHECK(find_bbl_constant(F, 30).found);
    }
}

TEST_CASE("check_bal") {
    auto m = MonomialIdeal::maximal(2);
    FamilyEvaluator powers(FamilySpec::powers_of(m));
    auto b = check_bal(powers, 20);
    CHECK(b.found);
    CHECK(b.c == 1);

    FamilyEvaluator xn_y(FamilySpec::custom_family(
        [](Int n) { return MonomialIdeal::normalize({{n, 0}, {0, 1}}, 2); }, 2, IndexKind::natural));
    CHECK_FALSE(check_bal(xn_y, 20).found);

    FamilyEvaluator br(FamilySpec::bracket_of(m, 2));
    auto bq = check_bal(br, 64);
    CHECK(bq.found);
    CHECK(bq.c == 1);
}

TEST_CASE("product of weakly graded families stays weakly graded") {
    std::mt19937 rng(227);
    for (int t = 0; t < 6; ++t) {
        auto F = FamilySpec::powers_of(random_m_primary(rng, 2, 3, 2));
        auto G = FamilySpec::floor_power_of(random_m_primary(rng, 2, 3, 1), BigRat(3, 2));
        FamilyEvaluator fe(F), ge(G);
        REQUIRE(find_weakly_graded_witness(fe, 8, 2).found);
        REQUIRE(find_weakly_graded_witness(ge, 8, 2).found);
        FamilyEvaluator pe(FamilySpec::product_family(F, G));
        CHECK(find_weakly_graded_witness(pe, 8, 3).found);
    }
}

TEST_CASE("classify produces a coherent report") {
    auto m = MonomialIdeal::maximal(2);
    FamilyEvaluator powers(FamilySpec::powers_of(m));
    auto rep = classify(powers, 10, 2);
    CHECK(rep.graded.has_value());
    CHECK(*rep.graded);
    CHECK(rep.weakly_graded->found);
    CHECK(rep.bbl->found);
    CHECK(rep.bal->found);

    FamilyEvaluator br(FamilySpec::bracket_of(m, 3));
    auto repq = classify(br, 81, 2);
    CHECK(*repq.p_family);
    CHECK(*repq.inverse_p_family);
    CHECK(*repq.f_graded);
    CHECK(repq.bbl->found);
}
