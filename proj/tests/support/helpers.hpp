#pragma once

#include "persistdist/extreal.hpp"
#include "persistdist/interval.hpp"

#include <vector>

namespace persistdist::testing {

inline Point pt(long x, long y) { return Point{ExtendedScalar(x), ExtendedScalar(y)}; }
inline Point pt(Rational x, Rational y) {
    return Point{ExtendedScalar(std::move(x)), ExtendedScalar(std::move(y))};
}

inline ExtendedScalar rat(long num, long den = 1) { return ExtendedScalar(Rational(num, den)); }

// The square [lo, hi]^2.
inline StaircaseInterval square(long lo, long hi) {
    return StaircaseInterval::validate({pt(lo, hi), pt(lo, lo), pt(hi, lo)},
                                       {pt(lo, hi), pt(hi, hi), pt(hi, lo)});
}

// The closed upper quadrant {x >= (a, a)}.
inline StaircaseInterval quadrant(long a) {
    const ExtendedScalar inf = ExtendedScalar::pos_inf();
    const Point top{ExtendedScalar(a), inf};
    const Point corner{ExtendedScalar(a), ExtendedScalar(a)};
    const Point right{inf, ExtendedScalar(a)};
    return StaircaseInterval::validate({top, corner, right}, {top, Point{inf, inf}, right});
}

inline StaircaseInterval single_point(long x, long y) {
    return StaircaseInterval::validate({pt(x, y)}, {pt(x, y)});
}

// [0,1]x[0,3] ∪ [0,3]x[0,1]
inline StaircaseInterval l_shape() {
    return StaircaseInterval::validate({pt(0, 3), pt(0, 0), pt(3, 0)},
                                       {pt(0, 3), pt(1, 3), pt(1, 1), pt(3, 1), pt(3, 0)});
}

// [2,3]x[0,3] ∪ [0,3]x[2,3]
inline StaircaseInterval anti_l_shape() {
    return StaircaseInterval::validate({pt(0, 3), pt(0, 2), pt(2, 2), pt(2, 0), pt(3, 0)},
                                       {pt(0, 3), pt(3, 3), pt(3, 0)});
}

// Independent linear-walk membership used as the rasterization oracle: the
// column bounds come from a plain scan over the chain edges, no binary
// search shared with the implementation.
inline bool linear_contains(const StaircaseInterval& interval, const Point& p) {
    auto column = [&p](const MonotoneChain& chain, bool want_min) {
        bool found = false;
        ExtendedScalar best;
        auto consider = [&](const ExtendedScalar& y) {
            if (!found || (want_min ? y < best : y > best)) best = y;
            found = true;
        };
        const auto& vs = chain.vertices;
        for (const Point& v : vs)
            if (v.x == p.x) consider(v.y);
        for (std::size_t e = 0; e + 1 < vs.size(); ++e)
            if (vs[e].y == vs[e + 1].y && vs[e].x < p.x && p.x < vs[e + 1].x) consider(vs[e].y);
        return std::make_pair(found, best);
    };
    auto [has_lo, lo] = column(interval.lower(), true);
    auto [has_hi, hi] = column(interval.upper(), false);
    if (!has_lo || !has_hi) return false;
    return lo <= p.y && p.y <= hi;
}

// dl by linear edge walk, independent of the binary-search projection.
inline ExtendedScalar linear_diag_distance(const Point& x, const MonotoneChain& chain) {
    if (!x.x.is_finite() || !x.y.is_finite()) return diag_distance(x, chain);  // not exercised
    const Rational c = x.y.value() - x.x.value();
    bool found = false;
    Rational best;
    auto consider = [&](const Rational& d) {
        Rational a = d < 0 ? Rational(-d) : d;
        if (!found || a < best) best = a;
        found = true;
    };
    const auto& vs = chain.vertices;
    if (vs.size() == 1) {
        if (vs[0].is_finite() && Rational(vs[0].y.value() - vs[0].x.value()) == c)
            consider(vs[0].x.value() - x.x.value());
    }
    for (std::size_t e = 0; e + 1 < vs.size(); ++e) {
        const Point& a = vs[e];
        const Point& b = vs[e + 1];
        if (a.y == b.y) {
            if (!a.y.is_finite()) continue;
            const ExtendedScalar hx(Rational(a.y.value() - c));
            if (a.x <= hx && hx <= b.x) consider(hx.value() - x.x.value());
        } else {
            if (!a.x.is_finite()) continue;
            const ExtendedScalar hy(Rational(a.x.value() + c));
            if (b.y <= hy && hy <= a.y) consider(hy.value() - x.y.value());
        }
    }
    if (!found) return ExtendedScalar::pos_inf();
    return ExtendedScalar(best);
}

// All half-integer sample abscissae spanning the finite coordinates of the
// given intervals, padded by one unit.
inline std::vector<Rational> half_integer_samples(const std::vector<const StaircaseInterval*>& ivs) {
    bool any = false;
    Rational lo, hi;
    for (const StaircaseInterval* iv : ivs)
        for (const MonotoneChain* c : {&iv->lower(), &iv->upper()})
            for (const Point& p : c->vertices)
                for (const ExtendedScalar* coord : {&p.x, &p.y}) {
                    if (!coord->is_finite()) continue;
                    if (!any) {
                        lo = hi = coord->value();
                        any = true;
                    } else {
                        lo = std::min(lo, coord->value());
                        hi = std::max(hi, coord->value());
                    }
                }
    std::vector<Rational> out;
    if (!any) return out;
    for (Rational v = lo - 1; v <= hi + 1; v += Rational(1, 2)) out.push_back(v);
    return out;
}

}  // namespace persistdist::testing
