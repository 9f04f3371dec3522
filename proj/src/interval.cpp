#include "persistdist/interval.hpp"

#include <algorithm>
#include <cassert>

namespace persistdist {

namespace {

// y - x, totally ordered and strictly decreasing along a monotone chain.
// The indeterminate corners (+inf,+inf) / (-inf,-inf) get an arbitrary key:
// a chain containing one consists of boundary edges only and admits no
// finite diagonal crossing, so the exact edge tests below reject anyway.
ExtendedScalar diag_key(const Point& p) {
    if (p.x.is_finite() && p.y.is_finite()) return ExtendedScalar(Rational(p.y.value() - p.x.value()));
    if (p.y.is_pos_inf() && !p.x.is_pos_inf()) return ExtendedScalar::pos_inf();
    if (p.x.is_neg_inf() && !p.y.is_neg_inf()) return ExtendedScalar::pos_inf();
    if (p.y.is_neg_inf() && !p.x.is_neg_inf()) return ExtendedScalar::neg_inf();
    if (p.x.is_pos_inf() && !p.y.is_pos_inf()) return ExtendedScalar::neg_inf();
    return ExtendedScalar(0);
}

// Intersection of edge (p,q) with the diagonal of intercept c (finite
// anchors only).  Edges lying on the boundary at infinity never meet a
// finite diagonal.
std::optional<Point> edge_diag_hit(const Point& p, const Point& q, const Rational& c) {
    if (p.y == q.y) {
        if (!p.y.is_finite()) return std::nullopt;
        ExtendedScalar hit_x(Rational(p.y.value() - c));
        if (p.x <= hit_x && hit_x <= q.x) return Point{hit_x, p.y};
        return std::nullopt;
    }
    if (!p.x.is_finite()) return std::nullopt;
    ExtendedScalar hit_y(Rational(p.x.value() + c));
    if (q.y <= hit_y && hit_y <= p.y) return Point{p.x, hit_y};
    return std::nullopt;
}

std::optional<DiagonalHit> diag_project_finite(const Point& x, const MonotoneChain& chain) {
    const auto& vs = chain.vertices;
    const Rational c = x.y.value() - x.x.value();
    if (vs.size() == 1) {
        const Point& v = vs.front();
        if (v.is_finite() && Rational(v.y.value() - v.x.value()) == c)
            return DiagonalHit{v, ext_abs_diff(x.x, v.x)};
        return std::nullopt;
    }
    const ExtendedScalar cx(c);
    // first vertex whose key has dropped to <= c
    std::size_t lo = 0, hi = vs.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (diag_key(vs[mid]) > cx)
            lo = mid + 1;
        else
            hi = mid;
    }
    const std::size_t first = lo >= 2 ? lo - 2 : 0;
    const std::size_t last = std::min(lo + 1, vs.size() - 1);
    for (std::size_t i = first; i < last; ++i) {
        if (auto hit = edge_diag_hit(vs[i], vs[i + 1], c))
            return DiagonalHit{*hit, ext_abs_diff(x.x, hit->x)};
    }
    return std::nullopt;
}

// Nearest value to `target` within [lo, hi]; nullopt when the clamped value
// is not finite (the candidate point then has two infinite coordinates and
// is not on the diagonal).
std::optional<ExtendedScalar> clamp_finite(const ExtendedScalar& target, const ExtendedScalar& lo,
                                           const ExtendedScalar& hi) {
    const ExtendedScalar& t = target < lo ? lo : (target > hi ? hi : target);
    if (!t.is_finite()) return std::nullopt;
    return t;
}

// Anchor with exactly one infinite coordinate: the diagonal degenerates to
// one edge of the extended plane's boundary; intersect it with the chain's
// run on that edge.
std::optional<DiagonalHit> diag_project_boundary(const Point& x, const MonotoneChain& chain) {
    const auto& vs = chain.vertices;
    const std::size_t n = vs.size();
    if (x.y.is_pos_inf()) {  // top edge; the chain can touch it only in a prefix
        if (!vs.front().y.is_pos_inf()) return std::nullopt;
        std::size_t k = 0;
        while (k + 1 < n && vs[k + 1].y.is_pos_inf()) ++k;
        auto t = clamp_finite(x.x, vs.front().x, vs[k].x);
        if (!t) return std::nullopt;
        return DiagonalHit{Point{*t, x.y}, ext_abs_diff(x.x, *t)};
    }
    if (x.y.is_neg_inf()) {  // bottom edge: a suffix
        if (!vs.back().y.is_neg_inf()) return std::nullopt;
        std::size_t j = n - 1;
        while (j > 0 && vs[j - 1].y.is_neg_inf()) --j;
        auto t = clamp_finite(x.x, vs[j].x, vs.back().x);
        if (!t) return std::nullopt;
        return DiagonalHit{Point{*t, x.y}, ext_abs_diff(x.x, *t)};
    }
    if (x.x.is_pos_inf()) {  // right edge: a suffix
        if (!vs.back().x.is_pos_inf()) return std::nullopt;
        std::size_t j = n - 1;
        while (j > 0 && vs[j - 1].x.is_pos_inf()) --j;
        auto t = clamp_finite(x.y, vs.back().y, vs[j].y);
        if (!t) return std::nullopt;
        return DiagonalHit{Point{x.x, *t}, ext_abs_diff(x.y, *t)};
    }
    // left edge: a prefix
    if (!vs.front().x.is_neg_inf()) return std::nullopt;
    std::size_t k = 0;
    while (k + 1 < n && vs[k + 1].x.is_neg_inf()) ++k;
    auto t = clamp_finite(x.y, vs[k].y, vs.front().y);
    if (!t) return std::nullopt;
    return DiagonalHit{Point{x.x, *t}, ext_abs_diff(x.y, *t)};
}

std::vector<Point> canonicalize_chain(std::vector<Point> vs, const char* which) {
    if (vs.empty())
        throw ValidationError(ValidationError::Kind::NonMonotoneChain,
                              std::string(which) + " chain has no vertices");
    std::vector<Point> dedup;
    for (const Point& p : vs)
        if (dedup.empty() || !(p == dedup.back())) dedup.push_back(p);

    for (std::size_t i = 0; i + 1 < dedup.size(); ++i) {
        const Point& a = dedup[i];
        const Point& b = dedup[i + 1];
        const bool same_x = a.x == b.x;
        const bool same_y = a.y == b.y;
        if (!same_x && !same_y)
            throw ValidationError(ValidationError::Kind::NonRectilinearEdge,
                                  std::string(which) + " chain edge " + a.str() + " -> " + b.str() +
                                      " is neither horizontal nor vertical");
        if ((same_y && b.x < a.x) || (same_x && b.y > a.y))
            throw ValidationError(ValidationError::Kind::NonMonotoneChain,
                                  std::string(which) + " chain reverses at " + a.str() + " -> " +
                                      b.str() + " (x must not decrease, y must not increase)");
    }

    std::vector<Point> out;
    for (const Point& p : dedup) {
        while (out.size() >= 2) {
            const Point& a = out[out.size() - 2];
            const Point& b = out.back();
            if ((a.x == b.x && b.x == p.x) || (a.y == b.y && b.y == p.y))
                out.pop_back();
            else
                break;
        }
        out.push_back(p);
    }
    return out;
}

}  // namespace

std::optional<std::pair<ExtendedScalar, ExtendedScalar>> chain_y_range_at(
    const MonotoneChain& chain, const ExtendedScalar& x) {
    const auto& vs = chain.vertices;
    if (x < vs.front().x || x > vs.back().x) return std::nullopt;
    auto it = std::lower_bound(vs.begin(), vs.end(), x,
                               [](const Point& p, const ExtendedScalar& xx) { return p.x < xx; });
    if (it != vs.end() && it->x == x) {
        auto jt = std::upper_bound(it, vs.end(), x,
                                   [](const ExtendedScalar& xx, const Point& p) { return xx < p.x; });
        return std::make_pair(std::prev(jt)->y, it->y);
    }
    assert(it != vs.begin());
    const Point& a = *std::prev(it);  // x lies inside a horizontal edge
    return std::make_pair(a.y, a.y);
}

bool chain_contains(const MonotoneChain& chain, const Point& p) {
    auto r = chain_y_range_at(chain, p.x);
    return r && r->first <= p.y && p.y <= r->second;
}

std::optional<DiagonalHit> diag_project_chain(const Point& x, const MonotoneChain& chain) {
    const bool xinf = x.x.is_infinite();
    const bool yinf = x.y.is_infinite();
    if (xinf && yinf) {
        if (chain_contains(chain, x)) return DiagonalHit{x, ExtendedScalar(0)};
        return std::nullopt;
    }
    if (!xinf && !yinf) return diag_project_finite(x, chain);
    return diag_project_boundary(x, chain);
}

ExtendedScalar diag_distance(const Point& x, const MonotoneChain& chain) {
    auto hit = diag_project_chain(x, chain);
    return hit ? hit->dist : ExtendedScalar::pos_inf();
}

ExtendedScalar AtomSequence::representative(std::size_t k) const {
    if (is_point_atom(k)) return breaks[k / 2];
    const ExtendedScalar& a = breaks[k / 2];
    const ExtendedScalar& b = breaks[k / 2 + 1];
    if (a.is_finite() && b.is_finite())
        return ExtendedScalar(Rational((a.value() + b.value()) / 2));
    if (a.is_finite()) return ExtendedScalar(Rational(a.value() + 1));
    if (b.is_finite()) return ExtendedScalar(Rational(b.value() - 1));
    return ExtendedScalar(0);
}

AtomSequence merge_breakpoints(const std::vector<const MonotoneChain*>& chains,
                               const ExtendedScalar& x_min, const ExtendedScalar& x_max) {
    std::vector<ExtendedScalar> xs;
    xs.push_back(x_min);
    xs.push_back(x_max);
    for (const MonotoneChain* c : chains)
        for (const Point& p : c->vertices)
            if (x_min <= p.x && p.x <= x_max) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return AtomSequence{std::move(xs)};
}

StaircaseInterval StaircaseInterval::from_canonical_chains(MonotoneChain lower, MonotoneChain upper) {
    assert(!lower.vertices.empty() && !upper.vertices.empty());
    assert(lower.front() == upper.front() && lower.back() == upper.back());
    return StaircaseInterval(std::move(lower), std::move(upper));
}

StaircaseInterval StaircaseInterval::validate(std::vector<Point> lower_vertices,
                                              std::vector<Point> upper_vertices) {
    MonotoneChain lower{canonicalize_chain(std::move(lower_vertices), "lower")};
    MonotoneChain upper{canonicalize_chain(std::move(upper_vertices), "upper")};

    if (!(lower.front() == upper.front()) || !(lower.back() == upper.back()))
        throw ValidationError(ValidationError::Kind::ChainsEndpointMismatch,
                              "chains must share the top-left and bottom-right extremes, got lower " +
                                  lower.front().str() + " .. " + lower.back().str() + ", upper " +
                                  upper.front().str() + " .. " + upper.back().str());

    const AtomSequence atoms =
        merge_breakpoints({&lower, &upper}, lower.front().x, lower.back().x);
    const std::size_t count = atoms.atom_count();
    bool all_touch = true;
    bool interior_touch = false;
    for (std::size_t k = 0; k < count; ++k) {
        const ExtendedScalar x = atoms.representative(k);
        auto lr = chain_y_range_at(lower, x);
        auto ur = chain_y_range_at(upper, x);
        assert(lr && ur);
        const auto& [lo_min, lo_max] = *lr;
        const auto& [hi_min, hi_max] = *ur;
        if (lo_min > hi_max)
            throw ValidationError(ValidationError::Kind::EmptyRegion,
                                  "lower chain lies above the upper chain at x = " + x.str());
        if (lo_max > hi_max || hi_min < lo_min)
            throw ValidationError(ValidationError::Kind::SelfTouchingChains,
                                  "chains cross at x = " + x.str());
        const bool touch = hi_min <= lo_max;
        if (!touch)
            all_touch = false;
        else if (k != 0 && k + 1 != count)
            interior_touch = true;
    }
    if (interior_touch && !all_touch)
        throw ValidationError(ValidationError::Kind::SelfTouchingChains,
                              "chains meet between the shared extremes; only fully degenerate "
                              "intervals (points, segments) may coincide");

    return StaircaseInterval(std::move(lower), std::move(upper));
}

std::vector<Point> StaircaseInterval::all_vertices() const {
    std::vector<Point> vs = lower_.vertices;
    vs.insert(vs.end(), upper_.vertices.begin(), upper_.vertices.end());
    std::sort(vs.begin(), vs.end(), lex_less);
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

bool contains(const StaircaseInterval& interval, const Point& p) {
    auto lr = chain_y_range_at(interval.lower(), p.x);
    if (!lr) return false;
    auto ur = chain_y_range_at(interval.upper(), p.x);
    assert(ur);
    return lr->first <= p.y && p.y <= ur->second;
}

StaircaseInterval shift(const StaircaseInterval& interval, const Rational& d) {
    const Rational nd = -d;
    auto move = [&nd](const MonotoneChain& c) {
        MonotoneChain out;
        out.vertices.reserve(c.vertices.size());
        for (const Point& p : c.vertices)
            out.vertices.push_back(Point{ext_add(p.x, nd), ext_add(p.y, nd)});
        return out;
    };
    return StaircaseInterval::from_canonical_chains(move(interval.lower()), move(interval.upper()));
}

std::pair<std::vector<Point>, std::vector<Point>> boundary_vertices(const StaircaseInterval& interval) {
    return {interval.lower().vertices, interval.upper().vertices};
}

ExtendedScalar trivial_threshold(const StaircaseInterval& interval) {
    ExtendedScalar best(0);
    for (const Point& v : interval.lower().vertices) {
        ExtendedScalar d = diag_distance(v, interval.upper());
        if (d > best) best = d;
        if (best.is_pos_inf()) break;
    }
    return ext_half(best);
}

StaircaseInterval interval_from_columns(const AtomSequence& atoms, std::size_t first,
                                        std::size_t last, const std::vector<ExtendedScalar>& lo,
                                        const std::vector<ExtendedScalar>& hi) {
    assert(first <= last && last < atoms.atom_count());
    assert(atoms.is_point_atom(first) && atoms.is_point_atom(last));

    std::vector<Point> lower_vs;
    std::vector<Point> upper_vs;
    const ExtendedScalar x0 = atoms.breaks[first / 2];
    lower_vs.push_back(Point{x0, hi[first]});
    lower_vs.push_back(Point{x0, lo[first]});
    upper_vs.push_back(Point{x0, hi[first]});
    // The lower envelope is right-continuous (lo at a point atom equals lo
    // over the slab to its right), the upper envelope left-continuous; level
    // changes are vertical edges at the point atoms in between.
    for (std::size_t k = first + 2; k <= last; k += 2) {
        const ExtendedScalar x = atoms.breaks[k / 2];
        lower_vs.push_back(Point{x, lo[k - 1]});
        lower_vs.push_back(Point{x, lo[k]});
    }
    for (std::size_t k = first + 1; k < last; k += 2) {
        upper_vs.push_back(Point{atoms.breaks[k / 2], hi[k]});
        upper_vs.push_back(Point{atoms.breaks[k / 2 + 1], hi[k]});
    }
    const ExtendedScalar xm = atoms.breaks[last / 2];
    upper_vs.push_back(Point{xm, lo[last]});

    MonotoneChain lower{canonicalize_chain(std::move(lower_vs), "component lower")};
    MonotoneChain upper{canonicalize_chain(std::move(upper_vs), "component upper")};
    return StaircaseInterval::from_canonical_chains(std::move(lower), std::move(upper));
}

}  // namespace persistdist
