#include "acolen/newton.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

namespace acolen {

namespace {

BigInt vec_gcd(const std::vector<BigInt>& v, const BigInt& extra) {
    BigInt g = abs(extra);
    for (const auto& x : v) g = gcd(g, BigInt(abs(x)));
    return g == 0 ? BigInt(1) : g;
}

void push_candidate(std::set<std::pair<std::vector<BigInt>, BigInt>>& out,
                    std::vector<BigInt> normal, const std::vector<Exponents>& gens) {
    bool all_zero = true, any_neg = false, any_pos = false;
    for (const auto& x : normal) {
        if (x != 0) all_zero = false;
        if (x < 0) any_neg = true;
        if (x > 0) any_pos = true;
    }
    if (all_zero) return;
    if (any_neg && any_pos) return;  // mixed signs cannot support conv(G)+R^d_+
    if (any_neg)
        for (auto& x : normal) x = -x;
    BigInt offset;
    bool first = true;
    for (const auto& g : gens) {
        BigInt dot = 0;
        for (size_t i = 0; i < normal.size(); ++i) dot += normal[i] * g[i];
        if (first || dot < offset) offset = dot;
        first = false;
    }
    BigInt d = vec_gcd(normal, offset);
    for (auto& x : normal) x /= d;
    out.emplace(std::move(normal), offset / d);
}

std::vector<Halfspace> halfspaces_1d(const std::vector<Exponents>& gens) {
    BigInt m = gens.front()[0];
    for (const auto& g : gens) m = std::min(m, BigInt(g[0]));
    return {Halfspace{{1}, m}};
}

std::vector<Halfspace> halfspaces_2d(const std::vector<Exponents>& gens) {
    std::set<std::pair<std::vector<BigInt>, BigInt>> cand;
    push_candidate(cand, {1, 0}, gens);
    push_candidate(cand, {0, 1}, gens);
    // lower hull of the generator antichain, x ascending
    std::vector<Exponents> pts = gens;
    std::sort(pts.begin(), pts.end());
    std::vector<Exponents> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& o = hull[hull.size() - 2];
            const auto& a = hull[hull.size() - 1];
            BigInt cross =
                BigInt(a[0] - o[0]) * (p[1] - o[1]) - BigInt(a[1] - o[1]) * (p[0] - o[0]);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        const auto& v = hull[i];
        const auto& w = hull[i + 1];
        push_candidate(cand, {BigInt(v[1] - w[1]), BigInt(w[0] - v[0])}, gens);
    }
    std::vector<Halfspace> hs;
    for (auto& c : cand) hs.push_back({c.first, c.second});
    return hs;
}

std::vector<Halfspace> halfspaces_3d(const std::vector<Exponents>& gens) {
    std::set<std::pair<std::vector<BigInt>, BigInt>> cand;
    for (int i = 0; i < 3; ++i) {
        std::vector<BigInt> e(3, 0);
        e[static_cast<size_t>(i)] = 1;
        push_candidate(cand, e, gens);
    }
    const size_t n = gens.size();
    auto cross3 = [](const std::array<BigInt, 3>& a, const std::array<BigInt, 3>& b) {
        return std::vector<BigInt>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                   a[0] * b[1] - a[1] * b[0]};
    };
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            std::array<BigInt, 3> dif{BigInt(gens[j][0] - gens[i][0]),
                                      BigInt(gens[j][1] - gens[i][1]),
                                      BigInt(gens[j][2] - gens[i][2])};
            for (int k = 0; k < 3; ++k) {
                std::array<BigInt, 3> e{0, 0, 0};
                e[static_cast<size_t>(k)] = 1;
                push_candidate(cand, cross3(dif, e), gens);
            }
            for (size_t k = j + 1; k < n; ++k) {
                std::array<BigInt, 3> dif2{BigInt(gens[k][0] - gens[i][0]),
                                           BigInt(gens[k][1] - gens[i][1]),
                                           BigInt(gens[k][2] - gens[i][2])};
                push_candidate(cand, cross3(dif, dif2), gens);
            }
        }
    }
    std::vector<Halfspace> hs;
    for (auto& c : cand) hs.push_back({c.first, c.second});
    return hs;
}

BigRat dot_rat(const std::vector<BigInt>& n, const RatPoint& p) {
    BigRat s = 0;
    for (size_t i = 0; i < n.size(); ++i) s += BigRat(n[i]) * p[i];
    return s;
}

using Polygon = std::vector<std::array<BigRat, 2>>;

// clip by a*x + b*y >= c
Polygon clip(const Polygon& poly, const BigRat& a, const BigRat& b, const BigRat& c) {
    Polygon out;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % n];
        BigRat sp = a * p[0] + b * p[1] - c;
        BigRat sq = a * q[0] + b * q[1] - c;
        bool inp = sp >= 0, inq = sq >= 0;
        if (inp) out.push_back(p);
        if (inp != inq) {
            BigRat t = sp / (sp - sq);
            out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
        }
    }
    return out;
}

BigRat polygon_area(const Polygon& poly) {
    if (poly.size() < 3) return 0;
    BigRat s = 0;
    for (size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        s += p[0] * q[1] - q[0] * p[1];
    }
    if (s < 0) s = -s;
    return s / 2;
}

// area of the NP slice at height z inside [0,a1]x[0,a2]
BigRat slice_area(const std::vector<Halfspace>& planes, const BigRat& z, Int a1, Int a2) {
    Polygon poly{{BigRat(0), BigRat(0)},
                 {BigRat(a1), BigRat(0)},
                 {BigRat(a1), BigRat(a2)},
                 {BigRat(0), BigRat(a2)}};
    for (const auto& h : planes) {
        if (h.normal[0] == 0 && h.normal[1] == 0) {
            if (BigRat(h.normal[2]) * z < BigRat(h.offset)) return 0;
            continue;
        }
        poly = clip(poly, BigRat(h.normal[0]), BigRat(h.normal[1]),
                    BigRat(h.offset) - BigRat(h.normal[2]) * z);
        if (poly.empty()) return 0;
    }
    return polygon_area(poly);
}

}  // namespace

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal& I) : d_(I.dim()), gens_(I.gens()) {
    if (gens_.empty()) return;
    if (d_ == 1)
        halfspaces_ = halfspaces_1d(gens_);
    else if (d_ == 2)
        halfspaces_ = halfspaces_2d(gens_);
    else if (d_ == 3)
        halfspaces_ = halfspaces_3d(gens_);
}

bool NewtonPolyhedron::contains(const RatPoint& u) const {
    if (static_cast<int>(u.size()) != d_) throw input_error("point dimension mismatch");
    if (gens_.empty()) return false;
    if (!halfspaces_.empty()) {
        for (const auto& h : halfspaces_)
            if (dot_rat(h.normal, u) < BigRat(h.offset)) return false;
        return true;
    }
    MonomialIdeal I = MonomialIdeal::normalize(gens_, d_);
    return np_membership_simplex(I, u);
}

bool NewtonPolyhedron::contains(const Exponents& u) const {
    RatPoint p(u.begin(), u.end());
    return contains(p);
}

bool np_membership_simplex(const MonomialIdeal& I, const RatPoint& u) {
    if (static_cast<int>(u.size()) != I.dim()) throw input_error("point dimension mismatch");
    if (I.is_zero()) return false;
    const int d = I.dim();
    for (const auto& c : u)
        if (c < 0) return false;
    const auto& gens = I.gens();
    const size_t g = gens.size();
    const size_t art = g + static_cast<size_t>(d);  // artificial column
    const size_t ncols = art + 1;
    const size_t rhs = ncols;
    const size_t rows = static_cast<size_t>(d) + 1;
    std::vector<std::vector<BigRat>> T(rows, std::vector<BigRat>(ncols + 1, 0));
    for (size_t j = 0; j < static_cast<size_t>(d); ++j) {
        for (size_t i = 0; i < g; ++i) T[j][i] = gens[i][j];
        T[j][g + j] = 1;
        T[j][rhs] = u[j];
    }
    for (size_t i = 0; i < g; ++i) T[rows - 1][i] = 1;
    T[rows - 1][art] = 1;
    T[rows - 1][rhs] = 1;
    std::vector<size_t> basis(rows);
    for (size_t j = 0; j < rows; ++j) basis[j] = g + j;
    // phase-1: minimize the artificial variable; canonical cost row
    std::vector<BigRat> z(ncols + 1, 0);
    for (size_t i = 0; i <= ncols; ++i) z[i] = -T[rows - 1][i];
    z[art] = 0;
    for (;;) {
        size_t enter = ncols;
        for (size_t i = 0; i < ncols; ++i)
            if (i != art && z[i] < 0) {
                enter = i;  // Bland's rule
                break;
            }
        if (enter == ncols) break;
        size_t leave = rows;
        BigRat best;
        for (size_t r = 0; r < rows; ++r) {
            if (T[r][enter] <= 0) continue;
            BigRat ratio = T[r][rhs] / T[r][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                best = ratio;
                leave = r;
            }
        }
        if (leave == rows) return false;
        BigRat piv = T[leave][enter];
        for (auto& v : T[leave]) v /= piv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == leave || T[r][enter] == 0) continue;
            BigRat f = T[r][enter];
            for (size_t i = 0; i <= ncols; ++i) T[r][i] -= f * T[leave][i];
        }
        if (z[enter] != 0) {
            BigRat f = z[enter];
            for (size_t i = 0; i <= ncols; ++i) z[i] -= f * T[leave][i];
        }
        basis[leave] = enter;
    }
    return z[rhs] == 0;  // artificial driven to zero
}

bool np_membership(const MonomialIdeal& I, const RatPoint& u) {
    return np_membership_simplex(I, u);
}

bool np_membership(const MonomialIdeal& I, const Exponents& u) {
    RatPoint p(u.begin(), u.end());
    return np_membership_simplex(I, p);
}

MonomialIdeal integral_closure(const MonomialIdeal& I) {
    if (!is_m_primary(I)) throw input_error("integral_closure requires an m-primary ideal");
    if (I.is_unit()) return I;
    NewtonPolyhedron np(I);
    std::vector<Int> box = pure_power_box(I);
    std::vector<Exponents> found;
    Exponents u(static_cast<size_t>(I.dim()), 0);
    for (;;) {
        if (np.contains(u)) found.push_back(u);
        size_t axis = 0;
        for (; axis < u.size(); ++axis) {
            if (++u[axis] <= box[axis]) break;
            u[axis] = 0;
        }
        if (axis == u.size()) break;
    }
    return MonomialIdeal::normalize(std::move(found), I.dim(), I.char_p());
}

NpVolumeResult np_complement_volume(const MonomialIdeal& I, Int approx_level) {
    if (!is_m_primary(I)) throw input_error("np_complement_volume requires an m-primary ideal");
    NpVolumeResult res;
    if (I.is_unit()) return res;
    const int d = I.dim();
    std::vector<Int> box = pure_power_box(I);
    if (d == 1) {
        res.volume = box[0];
        return res;
    }
    if (d > 3) {
        res.exact = false;
        res.approx_level = approx_level;
        MonomialIdeal closed = integral_closure(power(I, approx_level));
        res.volume = BigRat(colength(closed).value, big_pow(approx_level, static_cast<unsigned>(d)));
        return res;
    }
    NewtonPolyhedron np(I);
    const auto& hs = np.halfspaces();
    if (d == 2) {
        Polygon poly{{BigRat(0), BigRat(0)},
                     {BigRat(box[0]), BigRat(0)},
                     {BigRat(box[0]), BigRat(box[1])},
                     {BigRat(0), BigRat(box[1])}};
        for (const auto& h : hs)
            poly = clip(poly, BigRat(h.normal[0]), BigRat(h.normal[1]), BigRat(h.offset));
        res.volume = BigRat(box[0]) * BigRat(box[1]) - polygon_area(poly);
        return res;
    }
    // d == 3: slice along z. The slice area is piecewise quadratic between
    // plane-triple events, so Simpson on each interval is exact.
    std::vector<Halfspace> planes = hs;
    for (int i = 0; i < 3; ++i) {
        std::vector<BigInt> n(3, 0);
        n[static_cast<size_t>(i)] = -1;
        planes.push_back({n, -BigInt(box[static_cast<size_t>(i)])});  // x_i <= a_i
    }
    std::set<BigRat> zs{BigRat(0), BigRat(box[2])};
    const size_t np_count = planes.size();
    for (size_t a = 0; a < np_count; ++a)
        for (size_t b = a + 1; b < np_count; ++b)
            for (size_t c = b + 1; c < np_count; ++c) {
                const auto& A = planes[a].normal;
                const auto& B = planes[b].normal;
                const auto& C = planes[c].normal;
                BigInt det = A[0] * (B[1] * C[2] - B[2] * C[1]) -
                             A[1] * (B[0] * C[2] - B[2] * C[0]) +
                             A[2] * (B[0] * C[1] - B[1] * C[0]);
                if (det == 0) continue;
                // z-component of the solution by Cramer's rule
                BigInt dz = A[0] * (B[1] * planes[c].offset - planes[b].offset * C[1]) -
                            A[1] * (B[0] * planes[c].offset - planes[b].offset * C[0]) +
                            planes[a].offset * (B[0] * C[1] - B[1] * C[0]);
                if (det < 0) {
                    det = -det;
                    dz = -dz;
                }
                BigRat zv(dz, det);
                if (zv > 0 && zv < BigRat(box[2])) zs.insert(zv);
            }
    std::vector<BigRat> breaks(zs.begin(), zs.end());
    BigRat np_vol = 0;
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
        const BigRat& z0 = breaks[i];
        const BigRat& z1 = breaks[i + 1];
        BigRat mid = (z0 + z1) / 2;
        BigRat h = z1 - z0;
        np_vol += h *
                  (slice_area(planes, z0, box[0], box[1]) +
                   4 * slice_area(planes, mid, box[0], box[1]) +
                   slice_area(planes, z1, box[0], box[1])) /
                  6;
    }
    res.volume = BigRat(box[0]) * BigRat(box[1]) * BigRat(box[2]) - np_vol;
    return res;
}

}  // namespace acolen
