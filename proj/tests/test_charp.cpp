#include "doctest.h"

#include "acolen/charp.hpp"

#include <random>

using namespace acolen;

namespace {

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

TEST_CASE("ok_basis construction") {
    auto b = ok_basis(2, 2);
    CHECK(b.elements == std::vector<Exponents>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(total_degree(b.c_witness) == 0);
    CHECK(ok_basis(1, 3).elements == std::vector<Exponents>{{0}, {1}, {2}});
    CHECK(ok_basis(3, 2).elements.size() == 8);
    CHECK_THROWS_AS(ok_basis(2, 4), input_error);
}

TEST_CASE("verify_ok_basis") {
    for (int d : {1, 2, 3})
        for (Int p : {2, 3, 5}) CHECK(verify_ok_basis(ok_basis(d, p)));

    // duplicate residue: (0,0) and (2,0) agree mod 2
    OkBasis bad = ok_basis(2, 2);
    bad.elements = {{0, 0}, {2, 0}, {0, 1}, {1, 1}};
    CHECK_FALSE(verify_ok_basis(bad));

    OkBasis wrong_count = ok_basis(2, 2);
    wrong_count.elements.pop_back();
    CHECK_FALSE(verify_ok_basis(wrong_count));
}

TEST_CASE("frobenius cover check") {
    CHECK(frobenius_cover_check(MonomialIdeal::maximal(2), 2));
    CHECK(frobenius_cover_check(power(MonomialIdeal::maximal(2), 2), 3));
    CHECK(frobenius_cover_check(MonomialIdeal::unit(2), 2));

    std::mt19937 rng(401);
    for (int t = 0; t < 60; ++t) {
        int d = 2 + t % 2;
        Int p = (t % 3 == 0) ? 2 : (t % 3 == 1 ? 3 : 5);
        auto I = random_m_primary(rng, d, 5, 3);
        CHECK(frobenius_cover_check(I, p));
        CHECK(frobenius_lower_check(I, p));
    }
}
