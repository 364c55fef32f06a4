#include "acolen/charp.hpp"

#include <algorithm>
#include <set>

namespace acolen {

OkBasis ok_basis(int d, Int p) {
    if (d < 1) throw input_error("ok_basis needs d >= 1");
    if (!is_prime(p)) throw input_error("ok_basis needs a prime p");
    OkBasis b;
    b.p = p;
    b.d = d;
    b.c_witness = Exponents(static_cast<size_t>(d), 0);
    Exponents u(static_cast<size_t>(d), 0);
    for (;;) {
        b.elements.push_back(u);
        size_t axis = 0;
        for (; axis < u.size(); ++axis) {
            if (++u[axis] < p) break;
            u[axis] = 0;
        }
        if (axis == u.size()) break;
    }
    std::sort(b.elements.begin(), b.elements.end());
    return b;
}

bool verify_ok_basis(const OkBasis& basis, Int sample_box) {
    if (basis.p < 2 || basis.d < 1) return false;
    BigInt expected = big_pow(BigInt(basis.p), static_cast<unsigned>(basis.d));
    if (BigInt(basis.elements.size()) != expected) return false;
    std::set<Exponents> residues;
    for (const auto& e : basis.elements) {
        if (static_cast<int>(e.size()) != basis.d) return false;
        Exponents r(e.size());
        for (size_t i = 0; i < e.size(); ++i) r[i] = e[i] % basis.p;
        if (!residues.insert(r).second) return false;  // duplicate residue class
    }
    // digit decomposition: every u in the sample box splits uniquely as p*a + r
    std::set<Exponents> elems(basis.elements.begin(), basis.elements.end());
    Exponents u(static_cast<size_t>(basis.d), 0);
    for (;;) {
        int matches = 0;
        for (const auto& r : basis.elements) {
            bool ok = true;
            for (size_t i = 0; i < u.size(); ++i) {
                Int rem = u[i] - r[i];
                if (rem < 0 || rem % basis.p != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) ++matches;
        }
        if (matches != 1) return false;
        size_t axis = 0;
        for (; axis < u.size(); ++axis) {
            if (++u[axis] <= sample_box) break;
            u[axis] = 0;
        }
        if (axis == u.size()) break;
    }
    return true;
}

bool frobenius_cover_check(const MonomialIdeal& I, Int p) {
    if (!is_prime(p)) throw input_error("frobenius_cover_check needs a prime p");
    if (!is_m_primary(I)) throw input_error("frobenius_cover_check requires an m-primary ideal");
    if (I.is_unit()) return true;
    MonomialIdeal frob = bracket_power(I, p);
    std::vector<Int> box = pure_power_box(frob);
    Exponents v(static_cast<size_t>(I.dim()), 0);
    for (;;) {
        if (contains_monomial(frob, v)) {
            Exponents a(v.size());
            for (size_t i = 0; i < v.size(); ++i) a[i] = v[i] / p;
            if (!contains_monomial(I, a)) return false;
        }
        size_t axis = 0;
        for (; axis < v.size(); ++axis) {
            if (++v[axis] < box[axis] + p) break;
            v[axis] = 0;
        }
        if (axis == v.size()) break;
    }
    return true;
}

bool frobenius_lower_check(const MonomialIdeal& I, Int p) {
    if (!is_prime(p)) throw input_error("frobenius_lower_check needs a prime p");
    if (!is_m_primary(I)) throw input_error("frobenius_lower_check requires an m-primary ideal");
    MonomialIdeal frob = bracket_power(I, p);
    std::vector<Int> box = pure_power_box(I);
    Exponents u(static_cast<size_t>(I.dim()), 0);
    for (;;) {
        if (contains_monomial(I, u)) {
            Exponents v(u.size());
            for (size_t i = 0; i < u.size(); ++i) v[i] = p * u[i];
            // p*u and a few shifts p*u + w must land in nu(I^[p])
            if (!contains_monomial(frob, v)) return false;
            for (size_t i = 0; i < v.size(); ++i) {
                Exponents w = v;
                w[i] += 1;
                if (!contains_monomial(frob, w)) return false;
            }
        }
        size_t axis = 0;
        for (; axis < u.size(); ++axis) {
            if (++u[axis] <= box[axis]) break;
            u[axis] = 0;
        }
        if (axis == u.size()) break;
    }
    return true;
}

}  // namespace acolen
