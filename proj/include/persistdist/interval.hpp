#pragma once

// Closed, discretely presented 2-parameter staircase intervals, given by a
// lower and an upper monotone rectilinear chain, plus the diagonal-line
// geometry on chains that most of the library is built from.

#include "persistdist/errors.hpp"
#include "persistdist/extreal.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace persistdist {

// A rectilinear chain whose vertices have non-decreasing x and
// non-increasing y, with collinear vertices merged.  A single vertex is the
// degenerate chain.
struct MonotoneChain {
    std::vector<Point> vertices;

    const Point& front() const { return vertices.front(); }
    const Point& back() const { return vertices.back(); }
    std::size_t size() const { return vertices.size(); }
    bool operator==(const MonotoneChain& o) const { return vertices == o.vertices; }
};

// The y-values the chain attains at abscissa x, as [min_y, max_y];
// nullopt when x is outside the chain's x-span.  A vertical edge at x gives
// a proper range, otherwise the range is a single value.
std::optional<std::pair<ExtendedScalar, ExtendedScalar>> chain_y_range_at(
    const MonotoneChain& chain, const ExtendedScalar& x);

bool chain_contains(const MonotoneChain& chain, const Point& p);

struct DiagonalHit {
    Point point;          // the nearest point of chain ∩ diagonal
    ExtendedScalar dist;  // d_inf from the anchor; finite unless the anchor
                          // sits on a boundary edge hit only at infinity
};

// Intersection of the diagonal line through x with the chain.  For finite
// anchors the intersection is at most one point (the chain's y-x key is
// strictly decreasing); for anchors on the boundary of the extended plane
// the intersection may be a boundary segment and the nearest point of it is
// returned.  nullopt means the diagonal misses the chain (dl = +inf).
std::optional<DiagonalHit> diag_project_chain(const Point& x, const MonotoneChain& chain);

// dl(x, chain): +inf when the projection is absent.
ExtendedScalar diag_distance(const Point& x, const MonotoneChain& chain);

class StaircaseInterval {
public:
    // Canonicalizes and checks the two vertex sequences; throws
    // ValidationError naming the violated invariant.  Enforces the
    // discretely-presented condition: the chains may meet only at the two
    // shared extremes, unless the whole interval is a point or a segment.
    static StaircaseInterval validate(std::vector<Point> lower_vertices,
                                      std::vector<Point> upper_vertices);

    // Trusted constructor for internally-built regions (intersection
    // components, shifts).  Chains must already be canonical and consistent;
    // mid-chain contact is allowed here because components of two staircase
    // intersections can legitimately pinch.
    static StaircaseInterval from_canonical_chains(MonotoneChain lower, MonotoneChain upper);

    const MonotoneChain& lower() const { return lower_; }
    const MonotoneChain& upper() const { return upper_; }

    const Point& top_left() const { return lower_.front(); }
    const Point& bottom_right() const { return lower_.back(); }

    bool operator==(const StaircaseInterval& o) const {
        return lower_ == o.lower_ && upper_ == o.upper_;
    }

    // Vertices of both chains, deduplicated, lexicographically sorted.
    std::vector<Point> all_vertices() const;

private:
    StaircaseInterval(MonotoneChain lower, MonotoneChain upper)
        : lower_(std::move(lower)), upper_(std::move(upper)) {}

    MonotoneChain lower_;
    MonotoneChain upper_;
};

bool contains(const StaircaseInterval& interval, const Point& p);

// The interval of M shifted diagonally: {x : x + d·(1,1) ∈ I}, i.e. the
// region translated by -d on both axes.  d may be negative.
StaircaseInterval shift(const StaircaseInterval& interval, const Rational& d);

// (VL, VU): vertex sets of the lower and upper chains; the two shared
// extremes appear in both.
std::pair<std::vector<Point>, std::vector<Point>> boundary_vertices(const StaircaseInterval& interval);

// τ(I) = max_{v ∈ VL(I)} dl(v, U(I)) / 2.  The module with interval I is
// 2δ-trivial exactly when δ > τ(I); equivalently τ(I) is the interleaving
// distance to the zero module.
ExtendedScalar trivial_threshold(const StaircaseInterval& interval);

// A finite multiset of staircase intervals: the indecomposables of an
// interval decomposable module.
struct IntervalModule {
    std::vector<StaircaseInterval> summands;
};

// --- slab machinery shared with the intersection module ---------------------

// Sorted distinct x-values; atoms alternate point / open-slab and are probed
// at exact representatives (slab midpoints, finite stand-ins next to
// infinite ends).
struct AtomSequence {
    std::vector<ExtendedScalar> breaks;

    std::size_t atom_count() const { return breaks.empty() ? 0 : 2 * breaks.size() - 1; }
    bool is_point_atom(std::size_t k) const { return k % 2 == 0; }
    ExtendedScalar representative(std::size_t k) const;
};

AtomSequence merge_breakpoints(const std::vector<const MonotoneChain*>& chains,
                               const ExtendedScalar& x_min, const ExtendedScalar& x_max);

// Builds the canonical interval with the given per-atom column bounds over
// a contiguous atom range [first, last] of `atoms`.
StaircaseInterval interval_from_columns(const AtomSequence& atoms, std::size_t first,
                                        std::size_t last, const std::vector<ExtendedScalar>& lo,
                                        const std::vector<ExtendedScalar>& hi);

}  // namespace persistdist
