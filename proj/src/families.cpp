#include "acolen/families.hpp"

#include "acolen/newton.hpp"

#include <algorithm>

namespace acolen {

namespace {

void require_dim_match(const FamilySpec& a, const FamilySpec& b) {
    if (a.dim != b.dim) throw input_error("family dimension mismatch");
    if (a.index != b.index) throw input_error("family index kind mismatch");
    if (a.index == IndexKind::p_power && a.p != b.p) throw input_error("family prime mismatch");
}

FamilySpec composite(FamilyKind kind, FamilySpec a, FamilySpec b) {
    require_dim_match(a, b);
    FamilySpec s;
    s.kind = kind;
    s.index = a.index;
    s.p = a.p;
    s.dim = a.dim;
    s.base = std::make_shared<FamilySpec>(std::move(a));
    s.other = std::make_shared<FamilySpec>(std::move(b));
    return s;
}

}  // namespace

FamilySpec FamilySpec::powers_of(MonomialIdeal I) {
    FamilySpec s;
    s.kind = FamilyKind::powers;
    s.dim = I.dim();
    s.ideal = std::move(I);
    return s;
}

FamilySpec FamilySpec::bracket_of(MonomialIdeal I, Int p) {
    if (!is_prime(p)) throw input_error("bracket family needs a prime p");
    FamilySpec s;
    s.kind = FamilyKind::bracket;
    s.index = IndexKind::p_power;
    s.p = p;
    s.dim = I.dim();
    s.ideal = std::move(I);
    return s;
}

FamilySpec FamilySpec::generalized_bracket_of(MonomialIdeal I, Int p) {
    if (!is_prime(p)) throw input_error("generalized bracket family needs a prime p");
    FamilySpec s;
    s.kind = FamilyKind::generalized_bracket;
    s.index = IndexKind::natural;
    s.p = p;
    s.dim = I.dim();
    s.ideal = std::move(I);
    return s;
}

FamilySpec FamilySpec::floor_power_of(MonomialIdeal I, BigRat alpha) {
    if (alpha <= 0) throw input_error("floor_power needs a positive rational alpha");
    FamilySpec s;
    s.kind = FamilyKind::floor_power;
    s.dim = I.dim();
    s.ideal = std::move(I);
    s.alpha = std::move(alpha);
    return s;
}

FamilySpec FamilySpec::colon_family(FamilySpec base, MonomialIdeal J) {
    if (base.dim != J.dim()) throw input_error("colon family dimension mismatch");
    FamilySpec s;
    s.kind = FamilyKind::colon_of;
    s.index = base.index;
    s.p = base.p;
    s.dim = base.dim;
    s.colon_j = std::move(J);
    s.base = std::make_shared<FamilySpec>(std::move(base));
    return s;
}

FamilySpec FamilySpec::closure_family(FamilySpec base) {
    FamilySpec s;
    s.kind = FamilyKind::closure_of;
    s.index = base.index;
    s.p = base.p;
    s.dim = base.dim;
    s.base = std::make_shared<FamilySpec>(std::move(base));
    return s;
}

FamilySpec FamilySpec::product_family(FamilySpec a, FamilySpec b) {
    return composite(FamilyKind::product_of, std::move(a), std::move(b));
}
FamilySpec FamilySpec::sum_family(FamilySpec a, FamilySpec b) {
    return composite(FamilyKind::sum_of, std::move(a), std::move(b));
}
FamilySpec FamilySpec::intersect_family(FamilySpec a, FamilySpec b) {
    return composite(FamilyKind::intersect_of, std::move(a), std::move(b));
}

FamilySpec FamilySpec::explicit_family(std::vector<MonomialIdeal> list, IndexKind idx, Int p) {
    if (list.empty()) throw input_error("explicit family needs at least one ideal");
    FamilySpec s;
    s.kind = FamilyKind::explicit_list;
    s.index = idx;
    s.p = p;
    s.dim = list.front().dim();
    for (const auto& I : list)
        if (I.dim() != s.dim) throw input_error("explicit family dimension mismatch");
    if (idx == IndexKind::p_power && !is_prime(p)) throw input_error("p-power family needs a prime p");
    s.list = std::move(list);
    return s;
}

FamilySpec FamilySpec::custom_family(std::function<MonomialIdeal(Int)> fn, int dim, IndexKind idx,
                                     Int p) {
    FamilySpec s;
    s.kind = FamilyKind::custom;
    s.index = idx;
    s.p = p;
    s.dim = dim;
    s.fn = std::move(fn);
    return s;
}

FamilyEvaluator::FamilyEvaluator(FamilySpec spec) : spec_(std::move(spec)) {}

MonomialIdeal FamilyEvaluator::evaluate_uncached(Int n) const {
    if (n < 0) throw input_error("family index must be >= 0");
    if (spec_.index == IndexKind::p_power) {
        if (!is_power_of(n, spec_.p)) throw input_error("index is not a power of p");
    }
    if (n == 0) return MonomialIdeal::unit(spec_.dim);
    switch (spec_.kind) {
        case FamilyKind::powers:
            return power(spec_.ideal, n);
        case FamilyKind::bracket:
            return bracket_power(spec_.ideal, n);
        case FamilyKind::generalized_bracket:
            return generalized_bracket_power(spec_.ideal, n, spec_.p);
        case FamilyKind::floor_power: {
            BigInt k = rat_floor(spec_.alpha * n);
            return power(spec_.ideal, k.convert_to<Int>());
        }
        case FamilyKind::colon_of:
            return colon(FamilyEvaluator(*spec_.base).evaluate_uncached(n), spec_.colon_j);
        case FamilyKind::closure_of:
            return integral_closure(FamilyEvaluator(*spec_.base).evaluate_uncached(n));
        case FamilyKind::product_of:
            return product(FamilyEvaluator(*spec_.base).evaluate_uncached(n),
                           FamilyEvaluator(*spec_.other).evaluate_uncached(n));
        case FamilyKind::sum_of:
            return sum(FamilyEvaluator(*spec_.base).evaluate_uncached(n),
                       FamilyEvaluator(*spec_.other).evaluate_uncached(n));
        case FamilyKind::intersect_of:
            return intersect(FamilyEvaluator(*spec_.base).evaluate_uncached(n),
                             FamilyEvaluator(*spec_.other).evaluate_uncached(n));
        case FamilyKind::explicit_list: {
            size_t slot;
            if (spec_.index == IndexKind::natural) {
                slot = static_cast<size_t>(n - 1);
            } else {
                Int e = 0;
                is_power_of(n, spec_.p, &e);
                slot = static_cast<size_t>(e);
            }
            if (slot >= spec_.list.size()) throw input_error("index beyond explicit family list");
            return spec_.list[slot];
        }
        case FamilyKind::custom:
            return spec_.fn(n);
    }
    throw input_error("unknown family kind");
}

MonomialIdeal FamilyEvaluator::evaluate(Int n) {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(n);
        if (it != memo_.end()) return it->second;
    }
    MonomialIdeal I = evaluate_uncached(n);
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.emplace(n, std::move(I)).first->second;
}

std::vector<Int> FamilyEvaluator::indices_up_to(Int bound) const {
    std::vector<Int> idx;
    if (spec_.index == IndexKind::natural) {
        for (Int n = 1; n <= bound; ++n) idx.push_back(n);
    } else {
        for (Int q = 1; q <= bound; q *= spec_.p) idx.push_back(q);
    }
    return idx;
}

PairCounterexample verify_graded_up_to(FamilyEvaluator& F, Int N) {
    if (F.index_kind() != IndexKind::natural) throw input_error("graded check needs a natural index");
    for (Int m = 1; m < N; ++m) {
        for (Int n = m; m + n <= N; ++n) {
            if (!contains_ideal(F.evaluate(m + n), product(F.evaluate(m), F.evaluate(n))))
                return {false, m, n};
        }
    }
    return {};
}

namespace {

// monomials of total degree <= D in increasing degree, then lex
std::vector<Exponents> witness_candidates(int d, Int D) {
    std::vector<Exponents> all;
    Exponents u(static_cast<size_t>(d), 0);
    for (;;) {
        if (total_degree(u) <= D) all.push_back(u);
        size_t axis = u.size();
        for (size_t i = 0; i < u.size(); ++i) {
            if (++u[i] <= D) {
                axis = i;
                break;
            }
            u[i] = 0;
        }
        if (axis == u.size()) break;
    }
    std::stable_sort(all.begin(), all.end(), [](const Exponents& a, const Exponents& b) {
        Int da = total_degree(a), db = total_degree(b);
        return da != db ? da < db : a < b;
    });
    return all;
}

WitnessSearch witness_scan(FamilyEvaluator& F, Int D,
                           const std::vector<std::pair<Int, Int>>& pairs,
                           const std::function<bool(const Exponents&, Int, Int)>& ok) {
    WitnessSearch res;
    res.degree_bound = D;
    for (const auto& c : witness_candidates(F.dim(), D)) {
        bool good = true;
        for (const auto& [m, n] : pairs) {
            if (!ok(c, m, n)) {
                good = false;
                break;
            }
        }
        if (good) {
            res.found = true;
            res.witness = c;
            return res;
        }
    }
    return res;
}

MonomialIdeal scale_by_monomial(const MonomialIdeal& I, const Exponents& c) {
    std::vector<Exponents> g;
    g.reserve(I.gens().size());
    for (const auto& h : I.gens()) g.push_back(exp_sum(h, c));
    return MonomialIdeal::normalize(std::move(g), I.dim());
}

}  // namespace

WitnessSearch find_weakly_graded_witness(FamilyEvaluator& F, Int N, Int D) {
    if (F.index_kind() != IndexKind::natural) throw input_error("weakly graded check needs a natural index");
    std::vector<std::pair<Int, Int>> pairs;
    for (Int m = 1; m < N; ++m)
        for (Int n = m; m + n <= N; ++n) pairs.emplace_back(m, n);
    return witness_scan(F, D, pairs, [&](const Exponents& c, Int m, Int n) {
        return contains_ideal(F.evaluate(m + n),
                              scale_by_monomial(product(F.evaluate(m), F.evaluate(n)), c));
    });
}

PairCounterexample verify_p_family_up_to(FamilyEvaluator& F, Int E) {
    if (F.index_kind() != IndexKind::p_power) throw input_error("p-family check needs a p-power index");
    Int q = 1;
    for (Int e = 0; e < E; ++e, q *= F.p()) {
        if (!contains_ideal(F.evaluate(F.p() * q), bracket_power(F.evaluate(q), F.p())))
            return {false, q, F.p() * q};
    }
    return {};
}

PairCounterexample verify_inverse_p_family_up_to(FamilyEvaluator& F, Int E) {
    if (F.index_kind() != IndexKind::p_power) throw input_error("inverse p-family check needs a p-power index");
    Int q = 1;
    for (Int e = 0; e < E; ++e, q *= F.p()) {
        if (!contains_ideal(bracket_power(F.evaluate(q), F.p()), F.evaluate(F.p() * q)))
            return {false, q, F.p() * q};
    }
    return {};
}

PairCounterexample verify_F_graded_up_to(FamilyEvaluator& F, Int E) {
    if (F.index_kind() != IndexKind::p_power) throw input_error("F-graded check needs a p-power index");
    Int bound = 1;
    for (Int e = 0; e < E; ++e) bound *= F.p();
    for (Int q1 = 1; q1 <= bound; q1 *= F.p()) {
        for (Int q2 = 1; q1 * q2 <= bound; q2 *= F.p()) {
            auto lhs = product(bracket_power(F.evaluate(q1), q2), F.evaluate(q2));
            if (!contains_ideal(F.evaluate(q1 * q2), lhs)) return {false, q1, q2};
        }
    }
    return {};
}

WitnessSearch find_weakly_p_witness(FamilyEvaluator& F, Int E, Int D) {
    std::vector<std::pair<Int, Int>> pairs;
    Int q = 1;
    for (Int e = 0; e < E; ++e, q *= F.p()) pairs.emplace_back(q, 0);
    return witness_scan(F, D, pairs, [&](const Exponents& c, Int q_, Int) {
        return contains_ideal(F.evaluate(F.p() * q_),
                              scale_by_monomial(bracket_power(F.evaluate(q_), F.p()), c));
    });
}

WitnessSearch find_weakly_inverse_p_witness(FamilyEvaluator& F, Int E, Int D) {
    std::vector<std::pair<Int, Int>> pairs;
    Int q = 1;
    for (Int e = 0; e < E; ++e, q *= F.p()) pairs.emplace_back(q, 0);
    return witness_scan(F, D, pairs, [&](const Exponents& c, Int q_, Int) {
        return contains_ideal(bracket_power(F.evaluate(q_), F.p()),
                              scale_by_monomial(F.evaluate(F.p() * q_), c));
    });
}

BblResult find_bbl_constant(FamilyEvaluator& F, Int N) {
    BblResult res;
    Int c = 0;
    for (Int n : F.indices_up_to(N)) {
        MonomialIdeal I = F.evaluate(n);
        if (!is_m_primary(I)) {
            res.bad_index = n;
            return res;
        }
        Int thr = power_containment_threshold(I);
        c = std::max(c, (thr + n - 1) / n);
    }
    res.found = true;
    res.c = c;
    // a superlinear threshold trend makes the candidate track the last index;
    // flag it instead of reporting a spurious constant
    std::vector<Int> idx = F.indices_up_to(N);
    if (idx.size() >= 4) {
        auto implied = [&](Int n) {
            return (power_containment_threshold(F.evaluate(n)) + n - 1) / n;
        };
        Int at_last = implied(idx.back());
        Int at_mid = implied(idx[idx.size() / 2]);
        if (at_last == c && at_last >= at_mid + 2) res.unbounded_trend = true;
    }
    return res;
}

BalResult check_bal(FamilyEvaluator& F, Int N) {
    BalResult res;
    if (F.index_kind() == IndexKind::natural) {
        for (Int c = 1; c <= std::max<Int>(1, N / 2); ++c) {
            bool ok = true;
            for (Int n = 1; n <= N; ++n) {
                if (min_generator_degree(F.evaluate(n)) < n / c) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                res.found = true;
                res.c = c;
                return res;
            }
        }
        return res;
    }
    Int p = F.p();
    for (Int q0 = 1; q0 * p <= N; q0 *= p) {
        bool ok = true;
        for (Int q = 1; q * q0 <= N && ok; q *= p) {
            // I_{q q0} inside m^{[q]} iff every generator has a coordinate >= q
            MonomialIdeal I = F.evaluate(q * q0);
            for (const auto& g : I.gens()) {
                Int mx = 0;
                for (Int e : g) mx = std::max(mx, e);
                if (mx < q) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            res.found = true;
            res.c = q0;
            return res;
        }
    }
    return res;
}

ClassificationReport classify(FamilyEvaluator& F, Int bound, Int witness_degree) {
    ClassificationReport rep;
    rep.checked_bound = bound;
    rep.index = F.index_kind();
    if (F.index_kind() == IndexKind::natural) {
        rep.graded = verify_graded_up_to(F, bound).ok;
        rep.weakly_graded = find_weakly_graded_witness(F, bound, witness_degree);
    } else {
        Int E = 0;
        Int q = 1;
        while (q <= bound / F.p()) {
            q *= F.p();
            ++E;
        }
        rep.p_family = verify_p_family_up_to(F, E).ok;
        rep.weakly_p = find_weakly_p_witness(F, E, witness_degree);
        rep.inverse_p_family = verify_inverse_p_family_up_to(F, E).ok;
        rep.weakly_inverse_p = find_weakly_inverse_p_witness(F, E, witness_degree);
        rep.f_graded = verify_F_graded_up_to(F, E).ok;
    }
    rep.bbl = find_bbl_constant(F, bound);
    rep.bal = check_bal(F, bound);
    return rep;
}

}  // namespace acolen
