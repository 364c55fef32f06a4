#ifndef ACOLEN_NEWTON_HPP
#define ACOLEN_NEWTON_HPP

#include "acolen/monomial.hpp"

#include <vector>

namespace acolen {

using RatPoint = std::vector<BigRat>;

/// Halfspace <normal, x> >= offset with integer data.
struct Halfspace {
    std::vector<BigInt> normal;
    BigInt offset;
};

/// conv(gens) + R^d_+ for a monomial ideal. Halfspace lists are cached for
/// d <= 3; membership falls back to an exact simplex otherwise.
class NewtonPolyhedron {
public:
    explicit NewtonPolyhedron(const MonomialIdeal& I);

    int dim() const { return d_; }
    const std::vector<Exponents>& vertices() const { return gens_; }
    bool has_halfspaces() const { return !halfspaces_.empty() || gens_.empty(); }
    const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

    bool contains(const RatPoint& u) const;
    bool contains(const Exponents& u) const;

private:
    int d_;
    std::vector<Exponents> gens_;
    std::vector<Halfspace> halfspaces_;  // empty when d > 3
};

/// u in conv(gens(I)) + R^d_+, decided in exact rational arithmetic by a
/// phase-1 simplex over lambda >= 0, sum lambda = 1, sum lambda_i g_i <= u.
bool np_membership_simplex(const MonomialIdeal& I, const RatPoint& u);

bool np_membership(const MonomialIdeal& I, const RatPoint& u);
bool np_membership(const MonomialIdeal& I, const Exponents& u);

/// All lattice points of the Newton polyhedron inside the pure-power box,
/// normalized. Requires an m-primary input.
MonomialIdeal integral_closure(const MonomialIdeal& I);

struct NpVolumeResult {
    BigRat volume;          // exact for d <= 3
    bool exact = true;      // false when the lattice-count fallback was used
    Int approx_level = 0;   // scaling level n of the fallback
};

/// Volume of R^d_+ \ NP(I): exact via recursive slicing for d <= 3, a flagged
/// lattice-count approximation colength(closure(I^n))/n^d for d >= 4.
NpVolumeResult np_complement_volume(const MonomialIdeal& I, Int approx_level = 8);

}  // namespace acolen

#endif
