#ifndef ACOLEN_MONOMIAL_HPP
#define ACOLEN_MONOMIAL_HPP

#include "acolen/numeric.hpp"

#include <optional>
#include <vector>

namespace acolen {

/// A point of N^d, the exponent vector of a monomial x_1^{u_1}...x_d^{u_d}.
using Exponents = std::vector<Int>;

bool divides(const Exponents& g, const Exponents& u);           // g <= u componentwise
Exponents exp_sum(const Exponents& a, const Exponents& b);
Exponents exp_max(const Exponents& a, const Exponents& b);      // componentwise max (lcm)
Exponents exp_minus_clamped(const Exponents& a, const Exponents& b);  // max(a-b, 0)
Int total_degree(const Exponents& u);

/// A monomial ideal, stored as its minimal-generator antichain in N^d.
/// gens are lexicographically sorted; {} is the zero ideal, {0-vector} the
/// unit ideal.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    /// Builds the ideal generated by raw_gens, reducing to the divisibility
    /// antichain. Throws input_error on a dimension mismatch or d < 1.
    static MonomialIdeal normalize(std::vector<Exponents> raw_gens, int d,
                                   std::optional<Int> char_p = std::nullopt);
    static MonomialIdeal zero(int d) { return normalize({}, d); }
    static MonomialIdeal unit(int d) { return normalize({Exponents(static_cast<size_t>(d), 0)}, d); }
    /// Maximal ideal (x_1,...,x_d).
    static MonomialIdeal maximal(int d);

    int dim() const { return d_; }
    const std::vector<Exponents>& gens() const { return gens_; }
    std::optional<Int> char_p() const { return char_p_; }
    MonomialIdeal with_char_p(std::optional<Int> p) const;

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    std::size_t num_min_gens() const { return is_zero() ? 0 : gens_.size(); }

    bool operator==(const MonomialIdeal& o) const { return d_ == o.d_ && gens_ == o.gens_; }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

private:
    int d_ = 1;
    std::vector<Exponents> gens_;
    std::optional<Int> char_p_;
};

/// x^u in I  <=>  some generator divides x^u.
bool contains_monomial(const MonomialIdeal& I, const Exponents& u);

/// J subseteq I, checked generator by generator.
bool contains_ideal(const MonomialIdeal& I, const MonomialIdeal& J);

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);

/// Colon ideal I : J. Colon by the zero ideal gives the unit ideal; pass a
/// flag slot to observe that convention being applied.
MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J, bool* by_zero = nullptr);

MonomialIdeal power(const MonomialIdeal& I, Int n);
/// Frobenius-style bracket power: scales every generator by q.
MonomialIdeal bracket_power(const MonomialIdeal& I, Int q);
/// I^[n] via the base-p digits of n: product over k of (I^[p^k])^{n_k}.
MonomialIdeal generalized_bracket_power(const MonomialIdeal& I, Int n, Int p);

/// True iff every axis carries a pure-power generator (finite colength).
bool is_m_primary(const MonomialIdeal& I);

/// Pure-power exponent on each axis; only valid for m-primary ideals.
std::vector<Int> pure_power_box(const MonomialIdeal& I);

enum class ColengthMethod { box_enumeration, inclusion_exclusion };

struct ColengthResult {
    bool finite = true;
    BigInt value = 0;
    ColengthMethod method = ColengthMethod::box_enumeration;
    std::optional<std::vector<Exponents>> complement_points;
};

/// Number of lattice points outside the staircase of I. Exact; aggregates the
/// bounding box axis by axis rather than visiting points one at a time.
/// Returns finite=false for ideals that are not m-primary.
ColengthResult colength(const MonomialIdeal& I, int threads = 1);

/// Pointwise scan of the bounding box, recording the complement points.
/// Gated to boxes of at most max_box points.
ColengthResult colength_with_points(const MonomialIdeal& I, std::size_t max_box = 2000000);

/// Inclusion-exclusion over generator subsets with componentwise-max lcms and
/// sign (-1)^{|S|+1}. Correctness oracle; gated to mu(I) <= 20.
ColengthResult colength_inclusion_exclusion(const MonomialIdeal& I);

/// Largest total degree among complement lattice points (-1 for the unit
/// ideal, whose complement is empty).
Int max_complement_degree(const MonomialIdeal& I);

/// s+1 where s = max complement degree; m^k subseteq I iff k >= returned
/// value.
Int power_containment_threshold(const MonomialIdeal& I);

/// Smallest total degree among generators, i.e. the largest k with
/// I subseteq m^k. Zero ideal yields a very large sentinel.
Int min_generator_degree(const MonomialIdeal& I);

}  // namespace acolen

#endif
