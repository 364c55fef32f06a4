#ifndef ACOLEN_FAMILIES_HPP
#define ACOLEN_FAMILIES_HPP

#include "acolen/monomial.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace acolen {

enum class IndexKind { natural, p_power };

enum class FamilyKind {
    powers,
    bracket,
    generalized_bracket,
    floor_power,
    colon_of,
    closure_of,
    product_of,
    sum_of,
    intersect_of,
    explicit_list,
    custom,
};

/// Declarative description of an ideal family I_n (natural index) or I_q
/// (q = p^e). Composite kinds nest through shared_ptr members. The custom
/// kind wraps an arbitrary index -> ideal function and is available from code
/// only (no JSON form).
struct FamilySpec {
    IndexKind index = IndexKind::natural;
    Int p = 0;  // prime for p_power indexing and for generalized_bracket
    FamilyKind kind = FamilyKind::powers;
    MonomialIdeal ideal;                      // powers, bracket, generalized_bracket, floor_power
    BigRat alpha;                             // floor_power, stored exactly
    std::shared_ptr<FamilySpec> base, other;  // composite kinds
    MonomialIdeal colon_j;                    // colon_of
    std::vector<MonomialIdeal> list;          // explicit_list: entry k is I_{k+1} resp. I_{p^k}
    std::function<MonomialIdeal(Int)> fn;     // custom
    int dim = 0;

    static FamilySpec powers_of(MonomialIdeal I);
    static FamilySpec bracket_of(MonomialIdeal I, Int p);
    static FamilySpec generalized_bracket_of(MonomialIdeal I, Int p);
    static FamilySpec floor_power_of(MonomialIdeal I, BigRat alpha);
    static FamilySpec colon_family(FamilySpec base, MonomialIdeal J);
    static FamilySpec closure_family(FamilySpec base);
    static FamilySpec product_family(FamilySpec a, FamilySpec b);
    static FamilySpec sum_family(FamilySpec a, FamilySpec b);
    static FamilySpec intersect_family(FamilySpec a, FamilySpec b);
    static FamilySpec explicit_family(std::vector<MonomialIdeal> list, IndexKind idx, Int p = 0);
    static FamilySpec custom_family(std::function<MonomialIdeal(Int)> fn, int dim, IndexKind idx,
                                    Int p = 0);
};

/// Memoized evaluation of a FamilySpec. evaluate() is safe to call
/// concurrently; the memo is mutex-guarded and cache-transparent.
class FamilyEvaluator {
public:
    explicit FamilyEvaluator(FamilySpec spec);

    const FamilySpec& spec() const { return spec_; }
    int dim() const { return spec_.dim; }
    IndexKind index_kind() const { return spec_.index; }
    Int p() const { return spec_.p; }

    /// I_n for a natural index, I_q for q a power of p. Throws input_error on
    /// an index invalid for the index kind.
    MonomialIdeal evaluate(Int n);

    /// Fresh recursive evaluation bypassing the memo (cache-transparency
    /// checks).
    MonomialIdeal evaluate_uncached(Int n) const;

    /// Valid indices up to bound: 1..N for natural, powers of p <= bound for
    /// p-power families.
    std::vector<Int> indices_up_to(Int bound) const;

private:
    FamilySpec spec_;
    std::map<Int, MonomialIdeal> memo_;
    std::mutex mutex_;
};

struct WitnessSearch {
    bool found = false;
    Exponents witness;  // monomial c with c I_m I_n inside I_{m+n}
    Int degree_bound = 0;
};

struct PairCounterexample {
    bool ok = true;
    Int m = 0, n = 0;  // first failing pair
};

/// Checks I_m I_n inside I_{m+n} for all m+n <= N.
PairCounterexample verify_graded_up_to(FamilyEvaluator& F, Int N);

/// Searches monomials c of total degree <= D (degree then lex) with
/// c I_m I_n inside I_{m+n} for all m+n <= N. Absence is inconclusive.
WitnessSearch find_weakly_graded_witness(FamilyEvaluator& F, Int N, Int D);

/// Containment checks for p-power families, exponents up to E.
PairCounterexample verify_p_family_up_to(FamilyEvaluator& F, Int E);
PairCounterexample verify_inverse_p_family_up_to(FamilyEvaluator& F, Int E);
/// F-graded: I_{q1}^{[q2]} I_{q2} inside I_{q1 q2} for all q1 q2 <= p^E.
PairCounterexample verify_F_graded_up_to(FamilyEvaluator& F, Int E);

WitnessSearch find_weakly_p_witness(FamilyEvaluator& F, Int E, Int D);
WitnessSearch find_weakly_inverse_p_witness(FamilyEvaluator& F, Int E, Int D);

struct BblResult {
    bool found = false;
    Int c = 0;
    Int bad_index = 0;  // index of a non-m-primary member, when found == false
    bool unbounded_trend = false;
};

/// Smallest c with c*n >= power_containment_threshold(I_n) for all checked
/// indices (m^{cn} inside I_n).
BblResult find_bbl_constant(FamilyEvaluator& F, Int N);

struct BalResult {
    bool found = false;
    Int c = 0;  // I_n inside m^{floor(n/c)}; for p-power families the q0 with I_{q q0} inside m^{[q]}
};

BalResult check_bal(FamilyEvaluator& F, Int N);

struct ClassificationReport {
    Int checked_bound = 0;
    IndexKind index = IndexKind::natural;
    std::optional<bool> graded;
    std::optional<WitnessSearch> weakly_graded;
    std::optional<bool> p_family;
    std::optional<WitnessSearch> weakly_p;
    std::optional<bool> inverse_p_family;
    std::optional<WitnessSearch> weakly_inverse_p;
    std::optional<bool> f_graded;
    std::optional<BblResult> bbl;
    std::optional<BalResult> bal;
};

ClassificationReport classify(FamilyEvaluator& F, Int bound, Int witness_degree);

}  // namespace acolen

#endif
