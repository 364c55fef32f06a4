#ifndef ACOLEN_ASYMPTOTICS_HPP
#define ACOLEN_ASYMPTOTICS_HPP

#include "acolen/families.hpp"
#include "acolen/newton.hpp"

#include <optional>
#include <string>
#include <vector>

namespace acolen {

struct SequencePoint {
    Int index = 0;
    BigInt colength;
    BigRat a;  // colength / index^d, exact
};

/// Exact a_n = l(R/I_n)/n^d over the given indices; parallel over indices with
/// deterministic order. Throws input_error on a non-m-primary member.
std::vector<SequencePoint> colength_sequence(FamilyEvaluator& F, const std::vector<Int>& indices,
                                             int threads = 0);

/// The complement staircase of I_n rescaled by 1/n with its exact volume.
struct ScaledRegion {
    Int level = 0;
    BigRat volume;
};

/// Exact rational volume of the scaled complement region, accumulated
/// geometrically in scaled coordinates (shoelace in d=2, rational slabs
/// above). Equals a_n by the cube decomposition.
ScaledRegion region_volume(FamilyEvaluator& F, Int n);

struct LimitEstimate {
    std::vector<SequencePoint> samples;
    BigRat liminf_estimate;
    BigRat limsup_estimate;
    std::optional<BigRat> limit;   // set when limsup - liminf < tolerance
    BigRat eta;                    // a at the largest sampled index
    BigRat rate_envelope;          // max over q of |a_q - eta| * q
    double rate_constant_ls = 0;   // least-squares C in |a_q - eta| <= C/q
    double tolerance = 0;
    Int bbl_c = 0;
};

/// Windowed liminf/limsup estimation. The first 30% of the sampled indices
/// are discarded as burn-in and the estimates are taken over the rest, so a
/// subsequence spike (e.g. at powers of p) stays visible. BBL is checked on
/// a subsample first; failure throws input_error.
LimitEstimate limit_estimate(FamilyEvaluator& F, const std::vector<Int>& indices,
                             double tolerance = 1e-6, int threads = 0);

/// Exact limit for families whose asymptotics reduce to a Newton-polyhedron
/// volume (powers/floor_power/closures and their products; bracket families
/// and their products/sums/intersections). Empty when unrecognized.
std::optional<BigRat> exact_family_limit(const FamilySpec& spec);

enum class TrajectoryKind { nabla_low, delta_up, oscillating, undetermined };

struct TrajectoryClass {
    TrajectoryKind kind = TrajectoryKind::undetermined;
    std::vector<Int> window;
    std::vector<bool> complement_bits;  // [x]_n in (1/n) nu^c(I_n)
};

/// Tracks [x]_n = floor(nx)/n membership in the scaled complement across the
/// window. The tail (last half) decides: all-in-complement -> nabla_low,
/// all-in-ideal -> delta_up, both recurring (>= 3 each) -> oscillating.
TrajectoryClass trajectory_classify(FamilyEvaluator& F, const RatPoint& x,
                                    const std::vector<Int>& window);

struct HeightPoint {
    RatPoint y;        // point on the hyperplane sum(x) = 0
    BigRat t_lo, t_hi; // bracket of the boundary offset in b-units, b = (1,..,1)
    bool unbounded = false;
    double phi() const;    // Euclidean offset, t * sqrt(d)
    double phi_t() const;  // offset in b-units
};

struct HeightSample {
    int d = 0;
    Int probe_level = 0;
    double tol = 0;
    std::vector<HeightPoint> points;
};

/// Binary-searches the boundary of the level-n Delta surrogate
/// {x : floor(nx) in nu(I_n)} along x = y + t(1,..,1) for each grid point y.
/// Grid points must satisfy sum(y) = 0; tol is the Euclidean bracket width.
HeightSample height_sample(FamilyEvaluator& F, const std::vector<RatPoint>& grid, Int n_probe,
                           double tol);

/// Axis grid on the hyperplane: integer combinations k_i * step * (e_i - e_d),
/// |k_i| <= extent.
std::vector<RatPoint> hyperplane_grid(int d, Int extent, const BigRat& step);

struct LipschitzAudit {
    double max_ratio = 0;   // max |t_i - t_j| / ||y_i - y_j||
    double c3 = 0;          // sqrt((d-1)/d), the inscribed-cone bound
    bool pass = false;      // max_ratio <= c3 + 2 tol
};

LipschitzAudit lipschitz_audit(const HeightSample& hs);

struct HilbertSamuelResult {
    BigInt value;
    bool stabilized = false;
    std::vector<BigInt> lengths;  // l(R/I^k) trace
};

/// Hilbert-Samuel multiplicity via d-th finite differences of l(R/I^n),
/// stabilization = three consecutive equal differences.
HilbertSamuelResult hilbert_samuel(const MonomialIdeal& I, Int n_max = 64);

/// Hilbert-Kunz multiplicity e_HK(I) = colength(I) for monomial ideals,
/// cross-checked against l(R/I^[q])/q^d at q in {p, p^2}. A mismatch throws
/// std::logic_error (it would indicate a counting bug).
BigRat hilbert_kunz(const MonomialIdeal& I, Int p);

struct VerifyReport {
    std::string claim;
    std::string witness_range;
    BigRat lhs, rhs;
    double tolerance = 0;
    bool pass = false;
    bool inconclusive = false;
    std::string notes;
};

/// Volume = multiplicity. Natural index: Richardson-extrapolated d! a_n limit
/// against e(I_N)/N^d. p-power index: a_q == e_HK(I_q)/q^d exactly at every
/// sampled q.
VerifyReport verify_volume_multiplicity(FamilyEvaluator& F, Int bound, double tol = 1e-2);

/// Minkowski inequality for the pair (F, G) and their product family.
VerifyReport verify_minkowski(FamilyEvaluator& F, FamilyEvaluator& G, Int bound,
                              double tol = 1e-3);

/// BAL <=> positive limit, with threshold max(1e-4, 2 C_env / max index).
VerifyReport verify_positivity(FamilyEvaluator& F, Int bound);

/// Level-p^E scaled region volume against the limit estimate, within the
/// fitted C/q slack.
VerifyReport verify_brosowsky(FamilyEvaluator& F, Int E);

}  // namespace acolen

#endif
