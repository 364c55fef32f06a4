#include "doctest.h"

#include "acolen/asymptotics.hpp"

#include <random>

using namespace acolen;

namespace {

MonomialIdeal ideal(std::vector<Exponents> g, int d) { return MonomialIdeal::normalize(std::move(g), d); }

FamilyEvaluator powers_of_m(int d) { return FamilyEvaluator(FamilySpec::powers_of(MonomialIdeal::maximal(d))); }

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

TEST_CASE("colength_sequence pinned values") {
    auto F = powers_of_m(2);
    auto seq = colength_sequence(F, {10});
    CHECK(seq[0].a == BigRat(55, 100));

    FamilyEvaluator gb(FamilySpec::generalized_bracket_of(MonomialIdeal::maximal(2), 2));
    for (Int e = 1; e <= 6; ++e) {
        Int q = Int(1) << e;
        CHECK(colength_sequence(gb, {q})[0].a == 1);
    }
    CHECK(colength_sequence(gb, {3})[0].a == BigRat(6, 9));

    FamilyEvaluator notmp(FamilySpec::custom_family(
        [](Int) { return MonomialIdeal::normalize({{1, 0}}, 2); }, 2, IndexKind::natural));
    CHECK_THROWS_AS(colength_sequence(notmp, {1}), input_error);
}

TEST_CASE("colength_sequence is thread independent") {
    FamilyEvaluator gb(FamilySpec::generalized_bracket_of(MonomialIdeal::maximal(2), 2));
    std::vector<Int> idx;
    for (Int n = 1; n <= 40; ++n) idx.push_back(n);
    FamilyEvaluator gb2(gb.spec());
    auto seq1 = colength_sequence(gb, idx, 1);
    auto seq4 = colength_sequence(gb2, idx, 4);
    for (size_t i = 0; i < idx.size(); ++i) {
        CHECK(seq1[i].colength == seq4[i].colength);
        CHECK(seq1[i].a == seq4[i].a);
    }
}

TEST_CASE("region volume equals a_n exactly") {
    auto F = powers_of_m(2);
    CHECK(region_volume(F, 4).volume == BigRat(10, 16));
    FamilyEvaluator br(FamilySpec::bracket_of(MonomialIdeal::maximal(2), 2));
    CHECK(region_volume(br, 8).volume == 1);
    FamilySpec xn = FamilySpec::custom_family(
        [](Int n) { return MonomialIdeal::normalize({{n, 0}, {0, n}}, 2); }, 2, IndexKind::natural);
    FamilyEvaluator xyprod(FamilySpec::product_family(xn, xn));
    CHECK(region_volume(xyprod, 5).volume == 3);  // box minus corner: 75/25

    std::mt19937 rng(311);
    for (int t = 0; t < 25; ++t) {
        int d = 2 + t % 2;
        FamilyEvaluator G(FamilySpec::powers_of(random_m_primary(rng, d, 4, 2)));
        for (Int n : {1, 2, 5, 9}) {
            auto seq = colength_sequence(G, {n});
            CHECK(region_volume(G, n).volume == seq[0].a);
        }
    }
}

TEST_CASE("limit_estimate on powers of m") {
    auto F = powers_of_m(2);
    auto est = limit_estimate(F, F.indices_up_to(200), 1e-2);
    REQUIRE(est.limit.has_value());
    CHECK(std::abs(to_double(*est.limit) - 0.5) < 1e-2);
    CHECK(est.bbl_c == 1);
}

TEST_CASE("limit_estimate on the generalized Frobenius example") {
    FamilyEvaluator gb(FamilySpec::generalized_bracket_of(MonomialIdeal::maximal(2), 2));
    // subsequence n = 2^e - 1 tends to 1/2
    std::vector<Int> sub;
    for (Int e = 2; e <= 10; ++e) sub.push_back((Int(1) << e) - 1);
    auto est = limit_estimate(gb, sub, 2e-2);
    CHECK(std::abs(to_double(est.eta) - 0.5) < 1e-2);

    // full sequence oscillates: liminf near 1/2, limsup near 1
    FamilyEvaluator gb2(gb.spec());
    auto full = limit_estimate(gb2, gb2.indices_up_to(260), 1.0);
    CHECK(to_double(full.limsup_estimate) >= 0.95);
    CHECK(to_double(full.liminf_estimate) <= 0.55);
    CHECK_FALSE(std::abs(to_double(full.limsup_estimate - full.liminf_estimate)) < 1e-3);
}

TEST_CASE("limit_estimate refuses non-BBL families") {
    FamilyEvaluator quad(FamilySpec::custom_family(
        [](Int n) { return MonomialIdeal::normalize({{n, 0}}, 2); }, 2, IndexKind::natural));
    CHECK_THROWS_AS(limit_estimate(quad, quad.indices_up_to(10), 1e-2), input_error);
}

TEST_CASE("exact family limits") {
    auto m = MonomialIdeal::maximal(2);
    CHECK(*exact_family_limit(FamilySpec::powers_of(m)) == BigRat(1, 2));
    CHECK(*exact_family_limit(FamilySpec::floor_power_of(m, BigRat(3, 2))) == BigRat(9, 8));
    CHECK(*exact_family_limit(FamilySpec::closure_family(FamilySpec::powers_of(ideal({{2, 0}, {0, 2}}, 2)))) == 2);
    CHECK(*exact_family_limit(FamilySpec::product_family(FamilySpec::powers_of(m), FamilySpec::powers_of(m))) == 2);
    CHECK(*exact_family_limit(FamilySpec::bracket_of(power(m, 2), 2)) == 3);
    CHECK_FALSE(exact_family_limit(FamilySpec::colon_family(FamilySpec::powers_of(m), m)).has_value());
}

TEST_CASE("trajectory classification") {
    auto F = powers_of_m(2);
    std::vector<Int> window;
    for (Int n = 1; n <= 60; ++n) window.push_back(n);
    CHECK(trajectory_classify(F, {BigRat(3, 10), BigRat(3, 10)}, window).kind == TrajectoryKind::nabla_low);
    CHECK(trajectory_classify(F, {BigRat(7, 10), BigRat(7, 10)}, window).kind == TrajectoryKind::delta_up);
    CHECK(trajectory_classify(F, {BigRat(1, 2), BigRat(1, 2)}, window).kind == TrajectoryKind::oscillating);
    CHECK_THROWS_AS(trajectory_classify(F, {BigRat(0), BigRat(1)}, window), input_error);
}

TEST_CASE("trajectory matches Newton polyhedron sides for powers") {
    std::mt19937 rng(331);
    std::vector<Int> window;
    for (Int n = 40; n <= 160; ++n) window.push_back(n);
    int checked = 0;
    while (checked < 30) {
        auto I = random_m_primary(rng, 2, 4, 2);
        std::uniform_int_distribution<Int> num(1, 24);
        RatPoint x{BigRat(num(rng), 4), BigRat(num(rng), 4)};
        // keep points well away from the hull boundary
        RatPoint lo{x[0] - BigRat(1, 5), x[1] - BigRat(1, 5)};
        RatPoint hi{x[0] + BigRat(1, 5), x[1] + BigRat(1, 5)};
        if (lo[0] <= 0 || lo[1] <= 0) continue;
        bool in_lo = np_membership(I, lo), in_hi = np_membership(I, hi);
        if (in_lo != in_hi) continue;
        FamilyEvaluator F(FamilySpec::powers_of(I));
        auto tc = trajectory_classify(F, x, window);
        CHECK(tc.kind == (in_lo ? TrajectoryKind::delta_up : TrajectoryKind::nabla_low));
        ++checked;
    }
}

TEST_CASE("height sampling for powers of m") {
    auto F = powers_of_m(2);
    auto grid = hyperplane_grid(2, 4, BigRat(1, 16));
    CHECK(grid.size() == 9);
    auto hs = height_sample(F, grid, 512, 1e-3);
    REQUIRE(hs.points.size() == 9);
    for (const auto& pt : hs.points) CHECK_FALSE(pt.unbounded);
    // phi at the origin: 1/sqrt(2)
    for (const auto& pt : hs.points) {
        bool origin = true;
        for (const auto& c : pt.y) origin = origin && c == 0;
        if (origin) CHECK(pt.phi() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(2e-3));
    }
    auto audit = lipschitz_audit(hs);
    CHECK(audit.c3 == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(audit.pass);
}

TEST_CASE("height sampling for bracket(m) at the origin") {
    FamilyEvaluator br(FamilySpec::bracket_of(MonomialIdeal::maximal(2), 2));
    auto hs = height_sample(br, {RatPoint{BigRat(0), BigRat(0)}}, 64, 1e-3);
    CHECK(hs.points[0].phi() == doctest::Approx(std::sqrt(2.0)).epsilon(2e-3));
}

TEST_CASE("height function growth stays within the cone bound") {
    auto F = powers_of_m(2);
    // far offsets: phi_t(y) <= c3 * ||y|| + boundary offset at the origin
    for (Int s : {2, 4, 8}) {
        auto hs = height_sample(F, {RatPoint{BigRat(s), BigRat(-s)}}, 128, 1e-3);
        REQUIRE_FALSE(hs.points[0].unbounded);
        double norm = std::sqrt(2.0) * static_cast<double>(s);
        CHECK(hs.points[0].phi_t() <= (1.0 / std::sqrt(2.0)) * norm + 0.51);
    }
}

TEST_CASE("lipschitz audit on random steep staircases") {
    std::mt19937 rng(337);
    auto grid = hyperplane_grid(2, 3, BigRat(1, 8));
    for (int t = 0; t < 6; ++t) {
        auto I = random_m_primary(rng, 2, 6, 3);
        FamilyEvaluator F(FamilySpec::powers_of(I));
        auto hs = height_sample(F, grid, 256, 1e-3);
        CHECK(lipschitz_audit(hs).pass);
    }
    // single point: vacuous pass
    auto F = powers_of_m(2);
    auto hs = height_sample(F, {RatPoint{BigRat(0), BigRat(0)}}, 64, 1e-3);
    CHECK(lipschitz_audit(hs).pass);
}

TEST_CASE("hilbert_samuel") {
    CHECK(hilbert_samuel(MonomialIdeal::maximal(2)).value == 1);
    CHECK(hilbert_samuel(ideal({{2, 0}, {0, 3}}, 2)).value == 6);
    CHECK(hilbert_samuel(power(MonomialIdeal::maximal(2), 2)).value == 4);
    CHECK(hilbert_samuel(MonomialIdeal::maximal(3)).value == 1);

    // e(I) = d! vol(complement NP) and e(I) = e(closure(I))
    std::mt19937 rng(347);
    for (int t = 0; t < 12; ++t) {
        int d = 2 + t % 2;
        auto I = random_m_primary(rng, d, 4, 2);
        auto hs = hilbert_samuel(I);
        REQUIRE(hs.stabilized);
        BigRat vol = np_complement_volume(I).volume;
        BigInt fact = 1;
        for (int k = 2; k <= d; ++k) fact *= k;
        CHECK(BigRat(hs.value) == BigRat(fact) * vol);
        CHECK(hilbert_samuel(integral_closure(I)).value == hs.value);
    }
}

TEST_CASE("hilbert_kunz") {
    CHECK(hilbert_kunz(MonomialIdeal::maximal(2), 2) == 1);
    CHECK(hilbert_kunz(power(MonomialIdeal::maximal(2), 2), 3) == 3);
    CHECK(hilbert_kunz(ideal({{3, 0}, {1, 1}, {0, 2}}, 2), 2) == 4);
    std::mt19937 rng(353);
    for (int t = 0; t < 20; ++t) {
        auto I = random_m_primary(rng, 2 + t % 2, 5, 3);
        CHECK(hilbert_kunz(I, 2) == BigRat(colength(I).value));
    }
}

TEST_CASE("verify volume=multiplicity") {
    auto F = powers_of_m(2);
    auto rep = verify_volume_multiplicity(F, 60);
    CHECK(rep.pass);

    FamilyEvaluator cl(FamilySpec::closure_family(FamilySpec::powers_of(ideal({{2, 0}, {0, 2}}, 2))));
    auto rep2 = verify_volume_multiplicity(cl, 60);
    CHECK(rep2.pass);

    FamilyEvaluator br(FamilySpec::bracket_of(power(MonomialIdeal::maximal(2), 2), 2));
    auto rep3 = verify_volume_multiplicity(br, 64);
    CHECK(rep3.pass);
    CHECK(rep3.lhs == rep3.rhs);
}

TEST_CASE("verify Minkowski") {
    auto m = MonomialIdeal::maximal(2);
    // equality case: F = G = powers(m)
    FamilyEvaluator F(FamilySpec::powers_of(m)), G(FamilySpec::powers_of(m));
    auto rep = verify_minkowski(F, G, 40);
    CHECK(rep.pass);

    // explicit (x^n, y^n): 1 + 1 >= sqrt(3)
    FamilySpec xn = FamilySpec::custom_family(
        [](Int n) { return MonomialIdeal::normalize({{n, 0}, {0, n}}, 2); }, 2, IndexKind::natural);
    FamilyEvaluator F2(xn), G2(xn);
    auto rep2 = verify_minkowski(F2, G2, 60);
    CHECK(rep2.pass);

    FamilyEvaluator Fb(FamilySpec::bracket_of(m, 2)), Gb(FamilySpec::bracket_of(ideal({{2, 0}, {0, 2}}, 2), 2));
    auto rep3 = verify_minkowski(Fb, Gb, 64);
    CHECK(rep3.pass);
}

TEST_CASE("verify positivity") {
    auto F = powers_of_m(2);
    auto rep = verify_positivity(F, 60);
    CHECK(rep.pass);
    CHECK_FALSE(rep.inconclusive);

    FamilyEvaluator xny(FamilySpec::custom_family(
        [](Int n) { return MonomialIdeal::normalize({{n, 0}, {0, 1}}, 2); }, 2, IndexKind::natural));
    auto rep2 = verify_positivity(xny, 60);
    CHECK(rep2.pass);

    FamilyEvaluator fp(FamilySpec::floor_power_of(MonomialIdeal::maximal(2), BigRat(3, 2)));
    auto rep3 = verify_positivity(fp, 60);
    CHECK(rep3.pass);
}

TEST_CASE("verify Brosowsky") {
    FamilyEvaluator br(FamilySpec::bracket_of(MonomialIdeal::maximal(2), 2));
    auto rep = verify_brosowsky(br, 6);
    CHECK(rep.pass);
    CHECK(rep.lhs == 1);

    FamilyEvaluator br2(FamilySpec::bracket_of(power(MonomialIdeal::maximal(2), 2), 2));
    auto rep2 = verify_brosowsky(br2, 6);
    CHECK(rep2.pass);
    CHECK(rep2.lhs == 3);
}

TEST_CASE("a_n bounds for the generalized Frobenius family") {
    for (Int p : {2, 3}) {
        for (int d = 2; d <= 3; ++d) {
            FamilyEvaluator gb(FamilySpec::generalized_bracket_of(MonomialIdeal::maximal(d), p));
            Int N = d == 2 ? 120 : 40;
            auto seq = colength_sequence(gb, gb.indices_up_to(N));
            BigInt fact = 1;
            for (int k = 2; k <= d; ++k) fact *= k;
            for (const auto& pt : seq) {
                CHECK(pt.a >= BigRat(1, fact));
                CHECK(pt.a <= 1);
            }
        }
    }
}

TEST_CASE("one-sided C/q bound for weakly p families") {
    FamilyEvaluator br(FamilySpec::bracket_of(power(MonomialIdeal::maximal(2), 3), 2));
    auto est = limit_estimate(br, br.indices_up_to(64), 1.0);
    CHECK(est.rate_envelope == 0);  // bracket families are exactly constant
    for (const auto& pt : est.samples) {
        BigRat dev = pt.a - est.eta;
        CHECK(dev * pt.index <= est.rate_envelope);
    }
}
