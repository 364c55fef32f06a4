#ifndef ACOLEN_CHARP_HPP
#define ACOLEN_CHARP_HPP

#include "acolen/monomial.hpp"

#include <vector>

namespace acolen {

/// The monomial OK basis of a polynomial ring: all x^a with a in {0..p-1}^d.
/// F_*R is free over these monomials, so the scaling witness c can be taken
/// to be the unit (the zero exponent vector).
struct OkBasis {
    Int p = 0;
    int d = 0;
    std::vector<Exponents> elements;
    Exponents c_witness;
};

OkBasis ok_basis(int d, Int p);

/// Checks element count p^d, pairwise-distinct residues mod p, and unique
/// digit decomposition u = p*a + r with r in the basis for all u in a sample
/// box.
bool verify_ok_basis(const OkBasis& basis, Int sample_box = 20);

/// For every lattice point v of I^[p] inside the bounding box, floor(v/p)
/// must lie in the staircase of I (so v = p*floor(v/p) + r with r in the OK
/// basis).
bool frobenius_cover_check(const MonomialIdeal& I, Int p);

/// Converse containment p*nu(I) + N^d inside nu(I^[p]), sampled over the box.
bool frobenius_lower_check(const MonomialIdeal& I, Int p);

}  // namespace acolen

#endif
