#include "acolen/monomial.hpp"

#include "acolen/parallel.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>

namespace acolen {

bool divides(const Exponents& g, const Exponents& u) {
    for (size_t i = 0; i < g.size(); ++i)
        if (g[i] > u[i]) return false;
    return true;
}

Exponents exp_sum(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exponents exp_max(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exponents exp_minus_clamped(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max<Int>(a[i] - b[i], 0);
    return r;
}

Int total_degree(const Exponents& u) {
    Int s = 0;
    for (Int e : u) s += e;
    return s;
}

namespace {

// Keeps the dominance-minimal points of a deduplicated lex-sorted list.
std::vector<Exponents> antichain_2d(const std::vector<Exponents>& pts) {
    std::vector<Exponents> kept;
    Int min_y = std::numeric_limits<Int>::max();
    for (const auto& p : pts) {
        if (p[1] < min_y) {
            kept.push_back(p);
            min_y = p[1];
        }
    }
    return kept;
}

std::vector<Exponents> antichain_3d(const std::vector<Exponents>& pts) {
    std::vector<Exponents> kept;
    std::map<Int, Int> front;  // y -> z over kept points, z strictly decreasing in y
    for (const auto& p : pts) {
        auto it = front.upper_bound(p[1]);
        if (it != front.begin() && std::prev(it)->second <= p[2]) continue;  // dominated
        kept.push_back(p);
        // prune oracle entries now dominated in the (y,z)-plane
        auto rm = front.lower_bound(p[1]);
        while (rm != front.end() && rm->second >= p[2]) rm = front.erase(rm);
        front.emplace(p[1], p[2]);
    }
    return kept;
}

std::vector<Exponents> antichain_generic(const std::vector<Exponents>& pts) {
    std::vector<Exponents> kept;
    for (const auto& p : pts) {
        bool dom = false;
        for (const auto& k : kept)
            if (divides(k, p)) {
                dom = true;
                break;
            }
        if (!dom) kept.push_back(p);
    }
    return kept;
}

std::vector<Exponents> reduce_to_antichain(std::vector<Exponents> pts, int d) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 1) return pts;
    switch (d) {
        case 1: return {pts.front()};
        case 2: return antichain_2d(pts);
        case 3: return antichain_3d(pts);
        default: return antichain_generic(pts);
    }
}

void check_same_dim(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.dim() != J.dim()) throw input_error("ideal dimension mismatch");
}

std::optional<Int> merge_char_p(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.char_p() && J.char_p() && *I.char_p() == *J.char_p()) return I.char_p();
    if (I.char_p() && !J.char_p()) return I.char_p();
    if (J.char_p() && !I.char_p()) return J.char_p();
    return std::nullopt;
}

}  // namespace

MonomialIdeal MonomialIdeal::normalize(std::vector<Exponents> raw_gens, int d,
                                       std::optional<Int> char_p) {
    if (d < 1) throw input_error("ambient dimension must be >= 1");
    for (const auto& g : raw_gens) {
        if (static_cast<int>(g.size()) != d) throw input_error("generator has wrong dimension");
        for (Int e : g)
            if (e < 0) throw input_error("negative exponent in generator");
    }
    if (char_p && !is_prime(*char_p)) throw input_error("char_p must be prime");
    MonomialIdeal I;
    I.d_ = d;
    I.gens_ = reduce_to_antichain(std::move(raw_gens), d);
    I.char_p_ = char_p;
    return I;
}

MonomialIdeal MonomialIdeal::maximal(int d) {
    std::vector<Exponents> g;
    for (int i = 0; i < d; ++i) {
        Exponents e(static_cast<size_t>(d), 0);
        e[static_cast<size_t>(i)] = 1;
        g.push_back(std::move(e));
    }
    return normalize(std::move(g), d);
}

MonomialIdeal MonomialIdeal::with_char_p(std::optional<Int> p) const {
    return normalize(gens_, d_, p);
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && total_degree(gens_[0]) == 0;
}

bool contains_monomial(const MonomialIdeal& I, const Exponents& u) {
    if (static_cast<int>(u.size()) != I.dim()) throw input_error("point dimension mismatch");
    for (const auto& g : I.gens())
        if (divides(g, u)) return true;
    return false;
}

bool contains_ideal(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_dim(I, J);
    for (const auto& g : J.gens())
        if (!contains_monomial(I, g)) return false;
    return true;
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_dim(I, J);
    std::vector<Exponents> g = I.gens();
    g.insert(g.end(), J.gens().begin(), J.gens().end());
    return MonomialIdeal::normalize(std::move(g), I.dim(), merge_char_p(I, J));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_dim(I, J);
    std::vector<Exponents> g;
    g.reserve(I.gens().size() * J.gens().size());
    for (const auto& a : I.gens())
        for (const auto& b : J.gens()) g.push_back(exp_sum(a, b));
    return MonomialIdeal::normalize(std::move(g), I.dim(), merge_char_p(I, J));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    check_same_dim(I, J);
    std::vector<Exponents> g;
    g.reserve(I.gens().size() * J.gens().size());
    for (const auto& a : I.gens())
        for (const auto& b : J.gens()) g.push_back(exp_max(a, b));
    return MonomialIdeal::normalize(std::move(g), I.dim(), merge_char_p(I, J));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J, bool* by_zero) {
    check_same_dim(I, J);
    if (by_zero) *by_zero = false;
    if (J.is_zero()) {
        if (by_zero) *by_zero = true;
        return MonomialIdeal::unit(I.dim());
    }
    if (I.is_zero()) return I;
    MonomialIdeal result = MonomialIdeal::unit(I.dim());
    bool first = true;
    for (const auto& g : J.gens()) {
        std::vector<Exponents> shifted;
        shifted.reserve(I.gens().size());
        for (const auto& h : I.gens()) shifted.push_back(exp_minus_clamped(h, g));
        MonomialIdeal part = MonomialIdeal::normalize(std::move(shifted), I.dim());
        result = first ? part : intersect(result, part);
        first = false;
    }
    return result.with_char_p(merge_char_p(I, J));
}

MonomialIdeal power(const MonomialIdeal& I, Int n) {
    if (n < 0) throw input_error("power exponent must be >= 0");
    MonomialIdeal acc = MonomialIdeal::unit(I.dim()).with_char_p(I.char_p());
    MonomialIdeal base = I;
    while (n) {
        if (n & 1) acc = product(acc, base);
        n >>= 1;
        if (n) base = product(base, base);
    }
    return acc;
}

MonomialIdeal bracket_power(const MonomialIdeal& I, Int q) {
    if (q < 1) throw input_error("bracket power index must be >= 1");
    std::vector<Exponents> g = I.gens();
    for (auto& v : g)
        for (auto& e : v) e *= q;
    return MonomialIdeal::normalize(std::move(g), I.dim(), I.char_p());
}

MonomialIdeal generalized_bracket_power(const MonomialIdeal& I, Int n, Int p) {
    if (!is_prime(p)) throw input_error("p must be prime");
    if (n < 0) throw input_error("generalized bracket index must be >= 0");
    MonomialIdeal acc = MonomialIdeal::unit(I.dim()).with_char_p(p);
    Int scale = 1;
    while (n > 0) {
        Int digit = n % p;
        if (digit > 0) acc = product(acc, power(bracket_power(I, scale), digit));
        n /= p;
        scale *= p;
    }
    return acc;
}

bool is_m_primary(const MonomialIdeal& I) {
    if (I.is_zero()) return false;
    for (int axis = 0; axis < I.dim(); ++axis) {
        bool found = false;
        for (const auto& g : I.gens()) {
            bool pure = true;
            for (int j = 0; j < I.dim(); ++j)
                if (j != axis && g[static_cast<size_t>(j)] != 0) {
                    pure = false;
                    break;
                }
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::vector<Int> pure_power_box(const MonomialIdeal& I) {
    std::vector<Int> box(static_cast<size_t>(I.dim()), -1);
    for (const auto& g : I.gens()) {
        int support = -1;
        bool pure = true;
        for (int j = 0; j < I.dim(); ++j) {
            if (g[static_cast<size_t>(j)] != 0) {
                if (support >= 0) {
                    pure = false;
                    break;
                }
                support = j;
            }
        }
        if (!pure) continue;
        if (support < 0) return std::vector<Int>(static_cast<size_t>(I.dim()), 0);  // unit ideal
        box[static_cast<size_t>(support)] = g[static_cast<size_t>(support)];
    }
    for (Int b : box)
        if (b < 0) throw input_error("ideal is not m-primary");
    return box;
}

namespace {

// 2-D staircase front (x -> y, y strictly decreasing). For an m-primary set
// the front starts at x=0 and ends with y=0, and the complement count is the
// slab sum (x_{j+1}-x_j)*y_j.
class Front2D {
public:
    void insert(Int x, Int y) {
        auto it = front_.lower_bound(x);
        if (it != front_.begin() && std::prev(it)->second <= y) return;
        if (it != front_.end() && it->first == x && it->second <= y) return;
        while (it != front_.end() && it->second >= y) it = front_.erase(it);
        front_.emplace_hint(it, x, y);
    }

    BigInt complement_count() const {
        BigInt total = 0;
        for (auto it = front_.begin(); it != front_.end(); ++it) {
            auto nx = std::next(it);
            if (nx == front_.end()) break;
            total += BigInt(nx->first - it->first) * it->second;
        }
        return total;
    }

    Int max_complement_degree() const {
        Int best = -1;
        for (auto it = front_.begin(); it != front_.end(); ++it) {
            auto nx = std::next(it);
            if (nx == front_.end()) break;
            if (it->second > 0) best = std::max(best, nx->first - 1 + it->second - 1);
        }
        return best;
    }

    bool collapsed() const { return front_.size() == 1 && front_.begin()->first == 0 && front_.begin()->second == 0; }

private:
    std::map<Int, Int> front_;
};

BigInt colength_rec(const std::vector<Exponents>& gens, int d);

// Walks the distinct last-coordinate values, accumulating (gap) * (colength of
// the active slice projected one dimension down).
BigInt colength_sliced(const std::vector<Exponents>& gens, int d) {
    std::vector<Exponents> sorted = gens;
    const size_t last = static_cast<size_t>(d - 1);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [last](const Exponents& a, const Exponents& b) { return a[last] < b[last]; });
    BigInt total = 0;
    if (d == 3) {
        Front2D front;
        size_t i = 0;
        Int prev = 0;
        BigInt current = 0;
        while (i < sorted.size()) {
            Int v = sorted[i][last];
            if (v > prev) {
                total += current * (v - prev);
                prev = v;
            }
            while (i < sorted.size() && sorted[i][last] == v) {
                front.insert(sorted[i][0], sorted[i][1]);
                ++i;
            }
            current = front.complement_count();
            if (front.collapsed()) break;
        }
        return total;
    }
    // generic fallback: renormalize the active prefix at every distinct value
    std::vector<Exponents> active;
    size_t i = 0;
    Int prev = 0;
    BigInt current = 0;
    bool unit_seen = false;
    while (i < sorted.size() && !unit_seen) {
        Int v = sorted[i][last];
        if (v > prev) {
            total += current * (v - prev);
            prev = v;
        }
        while (i < sorted.size() && sorted[i][last] == v) {
            Exponents proj(sorted[i].begin(), sorted[i].end() - 1);
            if (total_degree(proj) == 0) unit_seen = true;
            active.push_back(std::move(proj));
            ++i;
        }
        if (unit_seen) break;
        current = colength_rec(reduce_to_antichain(active, d - 1), d - 1);
    }
    return total;
}

BigInt colength_rec(const std::vector<Exponents>& gens, int d) {
    if (d == 1) {
        Int m = gens.front()[0];
        for (const auto& g : gens) m = std::min(m, g[0]);
        return m;
    }
    if (d == 2) {
        Front2D front;
        for (const auto& g : gens) front.insert(g[0], g[1]);
        return front.complement_count();
    }
    return colength_sliced(gens, d);
}

Int max_complement_degree_rec(const std::vector<Exponents>& gens, int d) {
    if (d == 1) {
        Int m = gens.front()[0];
        for (const auto& g : gens) m = std::min(m, g[0]);
        return m - 1;
    }
    if (d == 2) {
        Front2D front;
        for (const auto& g : gens) front.insert(g[0], g[1]);
        return front.max_complement_degree();
    }
    std::vector<Exponents> sorted = gens;
    const size_t last = static_cast<size_t>(d - 1);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [last](const Exponents& a, const Exponents& b) { return a[last] < b[last]; });
    Int best = -1;
    std::vector<Exponents> active;
    size_t i = 0;
    while (i < sorted.size()) {
        Int v = sorted[i][last];
        bool unit_seen = false;
        while (i < sorted.size() && sorted[i][last] == v) {
            Exponents proj(sorted[i].begin(), sorted[i].end() - 1);
            if (total_degree(proj) == 0) unit_seen = true;
            active.push_back(std::move(proj));
            ++i;
        }
        if (unit_seen) break;
        Int next = (i < sorted.size()) ? sorted[i][last] : v;
        Int sub = max_complement_degree_rec(reduce_to_antichain(active, d - 1), d - 1);
        if (sub >= 0) best = std::max(best, sub + next - 1);
    }
    return best;
}

}  // namespace

ColengthResult colength(const MonomialIdeal& I, int threads) {
    ColengthResult r;
    if (!is_m_primary(I)) {
        r.finite = false;
        return r;
    }
    if (I.is_unit()) {
        r.value = 0;
        return r;
    }
    threads = resolve_threads(threads);
    if (threads > 1 && I.dim() == 3 && I.gens().size() > 512) {
        // split the last axis into ranges; each worker rebuilds its own prefix
        std::vector<Exponents> sorted = I.gens();
        std::stable_sort(sorted.begin(), sorted.end(),
                         [](const Exponents& a, const Exponents& b) { return a[2] < b[2]; });
        Int zmax = pure_power_box(I)[2];
        int chunks = std::min<int>(threads * 4, 64);
        std::vector<BigInt> partial(static_cast<size_t>(chunks), 0);
        parallel_for_index(static_cast<size_t>(chunks), threads, [&](size_t c) {
            Int lo = zmax * static_cast<Int>(c) / chunks;
            Int hi = zmax * static_cast<Int>(c + 1) / chunks;
            if (lo >= hi) return;
            Front2D front;
            BigInt total = 0;
            Int prev = lo;
            BigInt current = 0;
            size_t i = 0;
            for (; i < sorted.size() && sorted[i][2] <= lo; ++i) front.insert(sorted[i][0], sorted[i][1]);
            current = front.complement_count();
            while (i < sorted.size() && sorted[i][2] < hi) {
                Int v = sorted[i][2];
                total += current * (v - prev);
                prev = v;
                while (i < sorted.size() && sorted[i][2] == v) {
                    front.insert(sorted[i][0], sorted[i][1]);
                    ++i;
                }
                current = front.complement_count();
            }
            total += current * (hi - prev);
            partial[c] = total;
        });
        for (const auto& part : partial) r.value += part;
        return r;
    }
    r.value = colength_rec(I.gens(), I.dim());
    return r;
}

ColengthResult colength_with_points(const MonomialIdeal& I, std::size_t max_box) {
    ColengthResult r;
    if (!is_m_primary(I)) {
        r.finite = false;
        return r;
    }
    std::vector<Int> box = pure_power_box(I);
    std::size_t cells = 1;
    for (Int b : box) {
        if (b == 0) {
            r.value = 0;
            r.complement_points = std::vector<Exponents>{};
            return r;
        }
        if (cells > max_box / static_cast<std::size_t>(b)) throw input_error("bounding box too large for point enumeration");
        cells *= static_cast<std::size_t>(b);
    }
    std::vector<Exponents> pts;
    Exponents u(static_cast<size_t>(I.dim()), 0);
    for (;;) {
        if (!contains_monomial(I, u)) pts.push_back(u);
        int axis = 0;
        while (axis < I.dim()) {
            if (++u[static_cast<size_t>(axis)] < box[static_cast<size_t>(axis)]) break;
            u[static_cast<size_t>(axis)] = 0;
            ++axis;
        }
        if (axis == I.dim()) break;
    }
    std::sort(pts.begin(), pts.end());
    r.value = static_cast<Int>(pts.size());
    r.complement_points = std::move(pts);
    return r;
}

ColengthResult colength_inclusion_exclusion(const MonomialIdeal& I) {
    ColengthResult r;
    r.method = ColengthMethod::inclusion_exclusion;
    if (!is_m_primary(I)) {
        r.finite = false;
        return r;
    }
    const auto& gens = I.gens();
    if (gens.size() > 20) throw input_error("inclusion-exclusion oracle gated to mu(I) <= 20");
    std::vector<Int> box = pure_power_box(I);
    BigInt box_cells = 1;
    for (Int b : box) box_cells *= b;
    BigInt covered = 0;
    const size_t n = gens.size();
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        Exponents lcm(static_cast<size_t>(I.dim()), 0);
        int bits = 0;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1ull << i)) {
                lcm = exp_max(lcm, gens[i]);
                ++bits;
            }
        BigInt cells = 1;
        for (int j = 0; j < I.dim(); ++j) {
            Int w = box[static_cast<size_t>(j)] - lcm[static_cast<size_t>(j)];
            if (w <= 0) {
                cells = 0;
                break;
            }
            cells *= w;
        }
        if (bits % 2 == 1)
            covered += cells;
        else
            covered -= cells;
    }
    r.value = box_cells - covered;
    return r;
}

Int max_complement_degree(const MonomialIdeal& I) {
    if (!is_m_primary(I)) throw input_error("max_complement_degree requires an m-primary ideal");
    if (I.is_unit()) return -1;
    return max_complement_degree_rec(I.gens(), I.dim());
}

Int power_containment_threshold(const MonomialIdeal& I) {
    return max_complement_degree(I) + 1;
}

Int min_generator_degree(const MonomialIdeal& I) {
    if (I.is_zero()) return std::numeric_limits<Int>::max() / 2;
    Int m = total_degree(I.gens().front());
    for (const auto& g : I.gens()) m = std::min(m, total_degree(g));
    return m;
}

}  // namespace acolen
