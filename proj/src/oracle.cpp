#include "persistdist/oracle.hpp"

#include "persistdist/interleaving.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace persistdist {

namespace {

using i64 = std::int64_t;
constexpr i64 kDlMiss = std::numeric_limits<i64>::max();
constexpr i64 kMagnitudeCap = i64(1) << 58;

// ---------------------------------------------------------------------------
// Exact integer geometry.  All coordinates are pre-multiplied by a common
// denominator (times 4, so that grid midpoints stay integral and ±1 probes
// stay strictly inside arrangement cells).
// ---------------------------------------------------------------------------

struct ScaledPoint {
    i64 x, y;
};

struct ScaledChain {
    std::vector<ScaledPoint> vs;
};

struct ScaledRegion {
    std::vector<i64> bx;  // sorted distinct vertex abscissae
    std::vector<i64> lo_pt, hi_pt;
    std::vector<i64> lo_slab, hi_slab;  // over (bx[i], bx[i+1])

    bool contains(i64 x, i64 y) const {
        if (bx.empty() || x < bx.front() || x > bx.back()) return false;
        const auto it = std::lower_bound(bx.begin(), bx.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - bx.begin());
        if (bx[i] == x) return lo_pt[i] <= y && y <= hi_pt[i];
        return lo_slab[i - 1] <= y && y <= hi_slab[i - 1];
    }
};

class Scaler {
public:
    Scaler() : denom_(1) {}

    void observe(const StaircaseInterval& interval) {
        for (const MonotoneChain* c : {&interval.lower(), &interval.upper()})
            for (const Point& p : c->vertices) {
                observe(p.x);
                observe(p.y);
            }
    }

    void observe(const ExtendedScalar& v) {
        if (!v.is_finite())
            throw std::invalid_argument("oracle requires finite-vertex intervals");
        mpz_lcm(denom_.get_mpz_t(), denom_.get_mpz_t(), v.value().get_den().get_mpz_t());
    }

    void observe(const Rational& v) {
        mpz_lcm(denom_.get_mpz_t(), denom_.get_mpz_t(), v.get_den().get_mpz_t());
    }

    // Final scale: 4 * lcm of all observed denominators.
    void finalize() { scale_ = denom_ * 4; }

    i64 to_scaled(const Rational& q) const {
        mpz_class v = q.get_num() * mpz_class(scale_ / q.get_den());
        if (!v.fits_slong_p() || v > kMagnitudeCap || v < -kMagnitudeCap)
            throw SizeLimitExceeded("oracle coordinates overflow the scaled integer range");
        return static_cast<i64>(v.get_si());
    }

    i64 to_scaled(const ExtendedScalar& v) const { return to_scaled(v.value()); }

    Rational to_rational(i64 scaled) const {
        Rational r(scaled);
        r /= Rational(scale_);
        return r;
    }

private:
    mpz_class denom_;
    mpz_class scale_;
};

ScaledChain scale_chain(const MonotoneChain& chain, const Scaler& s) {
    ScaledChain out;
    out.vs.reserve(chain.vertices.size());
    for (const Point& p : chain.vertices) out.vs.push_back({s.to_scaled(p.x), s.to_scaled(p.y)});
    return out;
}

std::size_t break_index(const std::vector<i64>& bx, i64 x) {
    return static_cast<std::size_t>(std::lower_bound(bx.begin(), bx.end(), x) - bx.begin());
}

// Paints the per-break and per-slab envelope values of one chain; min_side
// selects the lower (min-assign) or upper (max-assign) role.
void paint_chain(const ScaledChain& chain, const std::vector<i64>& bx, std::vector<i64>& pt,
                 std::vector<i64>& slab, bool min_side) {
    auto assign = [min_side](i64& dst, i64 v) {
        if (min_side)
            dst = std::min(dst, v);
        else
            dst = std::max(dst, v);
    };
    for (const ScaledPoint& v : chain.vs) assign(pt[break_index(bx, v.x)], v.y);
    for (std::size_t e = 0; e + 1 < chain.vs.size(); ++e) {
        const ScaledPoint& a = chain.vs[e];
        const ScaledPoint& b = chain.vs[e + 1];
        if (a.y != b.y) continue;  // vertical edges already painted via endpoints
        const std::size_t ia = break_index(bx, a.x);
        const std::size_t ib = break_index(bx, b.x);
        for (std::size_t k = ia + 1; k < ib; ++k) assign(pt[k], a.y);
        for (std::size_t k = ia; k < ib; ++k) slab[k] = a.y;
    }
}

ScaledRegion build_region(const ScaledChain& lower, const ScaledChain& upper) {
    ScaledRegion r;
    for (const ScaledPoint& v : lower.vs) r.bx.push_back(v.x);
    for (const ScaledPoint& v : upper.vs) r.bx.push_back(v.x);
    std::sort(r.bx.begin(), r.bx.end());
    r.bx.erase(std::unique(r.bx.begin(), r.bx.end()), r.bx.end());
    const std::size_t n = r.bx.size();
    r.lo_pt.assign(n, std::numeric_limits<i64>::max());
    r.hi_pt.assign(n, std::numeric_limits<i64>::min());
    r.lo_slab.assign(n > 0 ? n - 1 : 0, 0);
    r.hi_slab.assign(n > 0 ? n - 1 : 0, 0);
    paint_chain(lower, r.bx, r.lo_pt, r.lo_slab, /*min_side=*/true);
    paint_chain(upper, r.bx, r.hi_pt, r.hi_slab, /*min_side=*/false);
    return r;
}

ScaledChain translate(const ScaledChain& chain, i64 d) {
    ScaledChain out = chain;
    for (ScaledPoint& v : out.vs) {
        v.x -= d;
        v.y -= d;
    }
    return out;
}

struct ScaledInterval {
    ScaledChain lower, upper;
    ScaledRegion region;
};

ScaledInterval make_scaled(const StaircaseInterval& interval, const Scaler& s) {
    ScaledInterval out{scale_chain(interval.lower(), s), scale_chain(interval.upper(), s), {}};
    out.region = build_region(out.lower, out.upper);
    return out;
}

ScaledInterval shift_scaled(const ScaledInterval& interval, i64 d) {
    ScaledInterval out{translate(interval.lower, d), translate(interval.upper, d), {}};
    out.region = build_region(out.lower, out.upper);
    return out;
}

// dl in scaled units by walking the chain; kDlMiss when the diagonal misses.
i64 scaled_diag_distance(i64 px, i64 py, const ScaledChain& chain) {
    const i64 c = py - px;
    i64 best = kDlMiss;
    if (chain.vs.size() == 1) {
        const ScaledPoint& v = chain.vs.front();
        if (v.y - v.x == c) best = std::abs(px - v.x);
        return best;
    }
    for (std::size_t e = 0; e + 1 < chain.vs.size(); ++e) {
        const ScaledPoint& a = chain.vs[e];
        const ScaledPoint& b = chain.vs[e + 1];
        if (a.y == b.y) {
            const i64 hx = a.y - c;
            if (a.x <= hx && hx <= b.x) best = std::min(best, std::abs(px - hx));
        } else {
            const i64 hy = a.x + c;
            if (b.y <= hy && hy <= a.y) best = std::min(best, std::abs(py - hy));
        }
    }
    return best;
}

// Connected components of the intersection of two scaled regions, as
// regions (maximal runs of nonempty columns over the merged breakpoints).
std::vector<ScaledRegion> scaled_components(const ScaledRegion& a, const ScaledRegion& b) {
    if (a.bx.empty() || b.bx.empty()) return {};
    const i64 x_min = std::max(a.bx.front(), b.bx.front());
    const i64 x_max = std::min(a.bx.back(), b.bx.back());
    if (x_min > x_max) return {};

    std::vector<i64> bx;
    bx.push_back(x_min);
    bx.push_back(x_max);
    for (i64 v : a.bx)
        if (x_min <= v && v <= x_max) bx.push_back(v);
    for (i64 v : b.bx)
        if (x_min <= v && v <= x_max) bx.push_back(v);
    std::sort(bx.begin(), bx.end());
    bx.erase(std::unique(bx.begin(), bx.end()), bx.end());

    // column of one region at a merged break / over a merged slab
    auto col_point = [](const ScaledRegion& r, i64 x, i64& lo, i64& hi) {
        const std::size_t i = break_index(r.bx, x);
        if (i < r.bx.size() && r.bx[i] == x) {
            lo = r.lo_pt[i];
            hi = r.hi_pt[i];
        } else {
            lo = r.lo_slab[i - 1];
            hi = r.hi_slab[i - 1];
        }
    };
    auto col_slab = [](const ScaledRegion& r, i64 xl, i64& lo, i64& hi) {
        // the merged slab starting at xl lies inside one slab of r
        std::size_t i = break_index(r.bx, xl);
        if (i == r.bx.size() || r.bx[i] != xl) --i;
        lo = r.lo_slab[i];
        hi = r.hi_slab[i];
    };

    const std::size_t atoms = 2 * bx.size() - 1;
    std::vector<i64> lo(atoms), hi(atoms);
    std::vector<bool> filled(atoms, false);
    for (std::size_t k = 0; k < atoms; ++k) {
        i64 la, ha, lb, hb;
        if (k % 2 == 0) {
            col_point(a, bx[k / 2], la, ha);
            col_point(b, bx[k / 2], lb, hb);
        } else {
            col_slab(a, bx[k / 2], la, ha);
            col_slab(b, bx[k / 2], lb, hb);
        }
        const i64 l = std::max(la, lb);
        const i64 h = std::min(ha, hb);
        if (l <= h) {
            lo[k] = l;
            hi[k] = h;
            filled[k] = true;
        }
    }

    std::vector<ScaledRegion> out;
    std::size_t k = 0;
    while (k < atoms) {
        if (!filled[k]) {
            ++k;
            continue;
        }
        std::size_t end = k;
        while (end + 1 < atoms && filled[end + 1]) ++end;
        assert(k % 2 == 0 && end % 2 == 0);
        ScaledRegion comp;
        for (std::size_t p = k; p <= end; p += 2) {
            comp.bx.push_back(bx[p / 2]);
            comp.lo_pt.push_back(lo[p]);
            comp.hi_pt.push_back(hi[p]);
            if (p + 1 <= end) {
                comp.lo_slab.push_back(lo[p + 1]);
                comp.hi_slab.push_back(hi[p + 1]);
            }
        }
        out.push_back(std::move(comp));
        k = end + 1;
    }
    return out;
}

// Sorted distinct coordinates plus midpoints plus one value beyond each end.
std::vector<i64> with_midpoints(std::vector<i64> vals) {
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::vector<i64> out;
    out.reserve(2 * vals.size() + 2);
    out.push_back(vals.front() - 4);
    for (std::size_t i = 0; i < vals.size(); ++i) {
        out.push_back(vals[i]);
        if (i + 1 < vals.size()) out.push_back(vals[i] + (vals[i + 1] - vals[i]) / 2);
    }
    out.push_back(vals.back() + 4);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void collect_coords(const ScaledInterval& si, const std::vector<i64>& shifts, std::vector<i64>& xs,
                    std::vector<i64>& ys) {
    for (const ScaledChain* c : {&si.lower, &si.upper})
        for (const ScaledPoint& v : c->vs)
            for (i64 d : shifts) {
                xs.push_back(v.x + d);
                ys.push_back(v.y + d);
            }
}

// Column accessor memoized per grid abscissa.
struct ColRef {
    i64 lo = 1, hi = 0;  // empty by default
    bool test(i64 y) const { return lo <= y && y <= hi; }
};

ColRef locate(const ScaledRegion& r, i64 x) {
    ColRef ref;
    if (r.bx.empty() || x < r.bx.front() || x > r.bx.back()) return ref;
    const std::size_t i = break_index(r.bx, x);
    if (i < r.bx.size() && r.bx[i] == x) {
        ref.lo = r.lo_pt[i];
        ref.hi = r.hi_pt[i];
    } else {
        ref.lo = r.lo_slab[i - 1];
        ref.hi = r.hi_slab[i - 1];
    }
    return ref;
}

// ---------------------------------------------------------------------------
// Interleaving decision
// ---------------------------------------------------------------------------

// Commutativity constraints are deduplicated into 12-bit codes:
// kind(2) | i+1(4) | j+1(4) | flags(2).  Component indices are < 12 by the
// enumeration bound, so i+1 fits in 4 bits.
struct ConstraintTable {
    std::array<bool, 4096> seen{};
    std::vector<std::uint16_t> codes;

    void add(unsigned kind, int i, int j, unsigned flags) {
        const unsigned code = (kind << 10) | (static_cast<unsigned>(i + 1) << 6) |
                              (static_cast<unsigned>(j + 1) << 2) | flags;
        if (!seen[code]) {
            seen[code] = true;
            codes.push_back(static_cast<std::uint16_t>(code));
        }
    }
};

bool assignments_satisfiable(const ConstraintTable& table, std::size_t c1, std::size_t c2) {
    const std::uint32_t masks = 1u << (c1 + c2);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
        const std::uint32_t a = mask & ((1u << c1) - 1);
        const std::uint32_t b = mask >> c1;
        bool ok = true;
        for (std::uint16_t code : table.codes) {
            const unsigned kind = code >> 10;
            const int i = static_cast<int>((code >> 6) & 15u) - 1;
            const int j = static_cast<int>((code >> 2) & 15u) - 1;
            const unsigned flags = code & 3u;
            const auto abit = [&](int k) { return k >= 0 && ((a >> k) & 1u); };
            const auto bbit = [&](int k) { return k >= 0 && ((b >> k) & 1u); };
            bool holds = true;
            switch (kind) {
            case 0:  // square commutativity of φ at an adjacent pair
                holds = ((flags & 2u) ? abit(j) : false) == ((flags & 1u) ? abit(i) : false);
                break;
            case 1:  // square commutativity of ψ
                holds = ((flags & 2u) ? bbit(j) : false) == ((flags & 1u) ? bbit(i) : false);
                break;
            case 2:  // triangular: ρ^M = ψ∘φ at a point
                holds = (abit(i) && bbit(j)) == (flags != 0);
                break;
            default:  // triangular: ρ^N = φ∘ψ
                holds = (bbit(i) && abit(j)) == (flags != 0);
                break;
            }
            if (!holds) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

int component_at(const std::vector<ColRef>& refs, std::size_t stride_index, i64 y,
                 std::size_t comp_count) {
    for (std::size_t c = 0; c < comp_count; ++c)
        if (refs[stride_index * comp_count + c].test(y)) return static_cast<int>(c);
    return -1;
}

}  // namespace

SampleGrid build_sample_grid(const StaircaseInterval& m, const StaircaseInterval& n,
                             const Rational& delta) {
    std::vector<Rational> xs, ys;
    const Rational shifts[5] = {Rational(0), delta, -delta, Rational(2 * delta), Rational(-2 * delta)};
    for (const StaircaseInterval* it : {&m, &n})
        for (const MonotoneChain* c : {&it->lower(), &it->upper()})
            for (const Point& p : c->vertices) {
                if (!p.x.is_finite() || !p.y.is_finite())
                    throw std::invalid_argument("oracle requires finite-vertex intervals");
                for (const Rational& d : shifts) {
                    xs.push_back(p.x.value() + d);
                    ys.push_back(p.y.value() + d);
                }
            }
    auto finish = [](std::vector<Rational>& vs) {
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        std::vector<Rational> out;
        out.reserve(2 * vs.size() + 2);
        out.push_back(vs.front() - 1);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            out.push_back(vs[i]);
            if (i + 1 < vs.size()) out.push_back((vs[i] + vs[i + 1]) / 2);
        }
        out.push_back(vs.back() + 1);
        vs = std::move(out);
    };
    finish(xs);
    finish(ys);
    return SampleGrid{std::move(xs), std::move(ys)};
}

bool oracle_is_interleaved(const StaircaseInterval& m, const StaircaseInterval& n,
                           const Rational& delta, const OracleLimits& limits) {
    assert(delta > 0);
    Scaler scaler;
    scaler.observe(m);
    scaler.observe(n);
    scaler.observe(delta);
    scaler.finalize();
    const i64 d = scaler.to_scaled(delta);

    const ScaledInterval sm = make_scaled(m, scaler);
    const ScaledInterval sn = make_scaled(n, scaler);
    const ScaledInterval sm_shift = shift_scaled(sm, d);
    const ScaledInterval sn_shift = shift_scaled(sn, d);

    const std::vector<ScaledRegion> comps1 = scaled_components(sm.region, sn_shift.region);
    const std::vector<ScaledRegion> comps2 = scaled_components(sn.region, sm_shift.region);
    const std::size_t c1 = comps1.size(), c2 = comps2.size();
    if (c1 + c2 > limits.max_components)
        throw TooManyComponents("intersection has " + std::to_string(c1 + c2) +
                                " components, bound is " + std::to_string(limits.max_components));

    std::vector<i64> xs, ys;
    const std::vector<i64> shifts = {0, d, -d, 2 * d, -2 * d};
    collect_coords(sm, shifts, xs, ys);
    collect_coords(sn, shifts, xs, ys);
    xs = with_midpoints(std::move(xs));
    ys = with_midpoints(std::move(ys));
    const std::size_t nx = xs.size(), ny = ys.size();

    // per-abscissa column handles, at x, x+δ and x+2δ
    std::vector<ColRef> rm(nx), rns(nx), rn(nx), rms(nx), rm2(nx), rn2(nx);
    std::vector<ColRef> rc1(nx * c1), rc2(nx * c2), rc1d(nx * c1), rc2d(nx * c2);
    for (std::size_t i = 0; i < nx; ++i) {
        rm[i] = locate(sm.region, xs[i]);
        rns[i] = locate(sn_shift.region, xs[i]);
        rn[i] = locate(sn.region, xs[i]);
        rms[i] = locate(sm_shift.region, xs[i]);
        rm2[i] = locate(sm.region, xs[i] + 2 * d);
        rn2[i] = locate(sn.region, xs[i] + 2 * d);
        for (std::size_t c = 0; c < c1; ++c) {
            rc1[i * c1 + c] = locate(comps1[c], xs[i]);
            rc1d[i * c1 + c] = locate(comps1[c], xs[i] + d);
        }
        for (std::size_t c = 0; c < c2; ++c) {
            rc2[i * c2 + c] = locate(comps2[c], xs[i]);
            rc2d[i * c2 + c] = locate(comps2[c], xs[i] + d);
        }
    }

    // per-point labels, row-major by x
    const std::size_t cells = nx * ny;
    std::vector<std::int8_t> in_m(cells), in_ns(cells), in_n(cells), in_ms(cells);
    std::vector<std::int8_t> lab1(cells), lab2(cells);
    ConstraintTable table;
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            const i64 y = ys[j];
            const std::size_t at = i * ny + j;
            in_m[at] = rm[i].test(y);
            in_ns[at] = rns[i].test(y);
            in_n[at] = rn[i].test(y);
            in_ms[at] = rms[i].test(y);
            lab1[at] = static_cast<std::int8_t>(
                in_m[at] && in_ns[at] ? component_at(rc1, i, y, c1) : -1);
            lab2[at] = static_cast<std::int8_t>(
                in_n[at] && in_ms[at] ? component_at(rc2, i, y, c2) : -1);

            // triangular commutativity at this sample point
            const bool rho_m = in_m[at] && rm2[i].test(y + 2 * d);
            const bool rho_n = in_n[at] && rn2[i].test(y + 2 * d);
            const int c1d = component_at(rc1d, i, y + d, c1);
            const int c2d = component_at(rc2d, i, y + d, c2);
            table.add(2, lab1[at], c2d, rho_m ? 1u : 0u);
            table.add(3, lab2[at], c1d, rho_n ? 1u : 0u);
        }
    }
    // square commutativity on all adjacent sample pairs (p, p+e_x), (p, p+e_y);
    // general pairs follow by composition along grid paths
    auto add_square = [&table](std::int8_t cp, std::int8_t cq, bool m_pair, bool ns_pair,
                               std::int8_t cp2, std::int8_t cq2, bool n_pair, bool ms_pair) {
        unsigned flags_phi = (m_pair ? 2u : 0u) | (ns_pair ? 1u : 0u);
        if (flags_phi != 0) table.add(0, cp, cq, flags_phi);
        unsigned flags_psi = (n_pair ? 2u : 0u) | (ms_pair ? 1u : 0u);
        if (flags_psi != 0) table.add(1, cp2, cq2, flags_psi);
    };
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ny; ++j) {
            const std::size_t at = i * ny + j;
            if (i + 1 < nx) {
                const std::size_t right = (i + 1) * ny + j;
                add_square(lab1[at], lab1[right], in_m[at] && in_m[right],
                           in_ns[at] && in_ns[right], lab2[at], lab2[right],
                           in_n[at] && in_n[right], in_ms[at] && in_ms[right]);
            }
            if (j + 1 < ny) {
                const std::size_t up = at + 1;
                add_square(lab1[at], lab1[up], in_m[at] && in_m[up], in_ns[at] && in_ns[up],
                           lab2[at], lab2[up], in_n[at] && in_n[up], in_ms[at] && in_ms[up]);
            }
        }
    }

    return assignments_satisfiable(table, c1, c2);
}

ExtendedScalar oracle_distance(const StaircaseInterval& m, const StaircaseInterval& n,
                               const OracleLimits& limits) {
    const CandidateSet s = candidate_set(m, n);
    for (const Rational& v : s.finite_values) {
        if (oracle_is_interleaved(m, n, v + s.epsilon, limits)) return ExtendedScalar(v);
    }
    return ExtendedScalar::pos_inf();
}

ExtendedScalar oracle_bottleneck(const IntervalModule& ms, const IntervalModule& ns,
                                 const OracleLimits& limits) {
    const std::size_t m = ms.summands.size(), n = ns.summands.size();
    if (m + n > limits.max_summands)
        throw SizeLimitExceeded("matching enumeration capped at " +
                                std::to_string(limits.max_summands) + " summands, got " +
                                std::to_string(m + n));
    std::vector<ExtendedScalar> row_triv, col_triv;
    for (const auto& s : ms.summands) row_triv.push_back(trivial_threshold(s));
    for (const auto& s : ns.summands) col_triv.push_back(trivial_threshold(s));
    std::vector<ExtendedScalar> d;
    d.reserve(m * n);
    for (const auto& mi : ms.summands)
        for (const auto& nj : ns.summands) d.push_back(interleaving_distance(mi, nj));

    ExtendedScalar best = ExtendedScalar::pos_inf();
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, std::size_t i, const ExtendedScalar& worst) -> void {
        if (worst >= best) return;
        if (i == m) {
            ExtendedScalar total = worst;
            for (std::size_t j = 0; j < n; ++j)
                if (!used[j]) total = ext_max(total, col_triv[j]);
            best = ext_min(best, total);
            return;
        }
        self(self, i + 1, ext_max(worst, row_triv[i]));  // leave M_i unmatched
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            used[j] = true;
            self(self, i + 1, ext_max(worst, d[i * n + j]));
            used[j] = false;
        }
    };
    rec(rec, 0, ExtendedScalar(0));
    return best;
}

bool rasterized_is_valid(const IntersectionComponent& q, const StaircaseInterval& m,
                         const StaircaseInterval& n) {
    Scaler scaler;
    scaler.observe(q.region);
    scaler.observe(m);
    scaler.observe(n);
    scaler.finalize();
    const ScaledInterval sq = make_scaled(q.region, scaler);
    const ScaledInterval sm = make_scaled(m, scaler);
    const ScaledInterval sn = make_scaled(n, scaler);

    std::vector<i64> xs, ys;
    for (const ScaledInterval* si : {&sq, &sm, &sn}) collect_coords(*si, {0}, xs, ys);
    xs = with_midpoints(std::move(xs));
    ys = with_midpoints(std::move(ys));
    const std::size_t nx = xs.size(), ny = ys.size();

    // bad1(y) = y in I_M \ I_N spoils condition (i) for every x >= y;
    // bad2(z) = z in I_N \ I_M spoils condition (ii) for every x <= z.
    std::vector<std::uint8_t> prefix_bad(nx * ny), suffix_bad(nx * ny);
    for (std::size_t i = 0; i < nx; ++i) {
        const ColRef cm = locate(sm.region, xs[i]);
        const ColRef cn = locate(sn.region, xs[i]);
        for (std::size_t j = 0; j < ny; ++j) {
            const bool in_m = cm.test(ys[j]);
            const bool in_n = cn.test(ys[j]);
            const std::size_t at = i * ny + j;
            prefix_bad[at] = (in_m && !in_n);
            suffix_bad[at] = (in_n && !in_m);
        }
    }
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) {
            const std::size_t at = i * ny + j;
            if (i > 0) prefix_bad[at] |= prefix_bad[at - ny];
            if (j > 0) prefix_bad[at] |= prefix_bad[at - 1];
        }
    for (std::size_t i = nx; i-- > 0;)
        for (std::size_t j = ny; j-- > 0;) {
            const std::size_t at = i * ny + j;
            if (i + 1 < nx) suffix_bad[at] |= suffix_bad[at + ny];
            if (j + 1 < ny) suffix_bad[at] |= suffix_bad[at + 1];
        }

    for (std::size_t i = 0; i < nx; ++i) {
        const ColRef cq = locate(sq.region, xs[i]);
        for (std::size_t j = 0; j < ny; ++j)
            if (cq.test(ys[j]) && (prefix_bad[i * ny + j] || suffix_bad[i * ny + j])) return false;
    }
    return true;
}

ExtendedScalar rasterized_d_triv_sup(const IntersectionComponent& q, const StaircaseInterval& m,
                                     const StaircaseInterval& n) {
    Scaler scaler;
    scaler.observe(q.region);
    scaler.observe(m);
    scaler.observe(n);
    scaler.finalize();
    const ScaledInterval sq = make_scaled(q.region, scaler);
    const ScaledInterval sm = make_scaled(m, scaler);
    const ScaledInterval sn = make_scaled(n, scaler);

    std::vector<i64> xs, ys;
    for (const ScaledInterval* si : {&sq, &sm, &sn}) collect_coords(*si, {0}, xs, ys);
    xs = with_midpoints(std::move(xs));
    ys = with_midpoints(std::move(ys));

    // boundary points of Q on the grid: inside Q but with a diagonal
    // neighbour outside (the scale keeps ±1 probes inside arrangement cells)
    i64 sup = 0;
    bool unbounded = false;
    for (i64 x : xs) {
        for (i64 y : ys) {
            if (!sq.region.contains(x, y)) continue;
            const bool on_lower = !sq.region.contains(x - 1, y - 1);
            const bool on_upper = !sq.region.contains(x + 1, y + 1);
            if (!on_lower && !on_upper) continue;
            const i64 du = scaled_diag_distance(x, y, sm.upper);
            const i64 dl = scaled_diag_distance(x, y, sn.lower);
            if (du == kDlMiss || dl == kDlMiss) {
                unbounded = true;
                break;
            }
            sup = std::max(sup, std::max(du, dl));
        }
        if (unbounded) break;
    }
    if (unbounded) return ExtendedScalar::pos_inf();
    return ExtendedScalar(scaler.to_rational(sup) / 2);
}

}  // namespace persistdist
