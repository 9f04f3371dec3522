#pragma once

// Exact interleaving distance between two 2-parameter interval modules:
// 1-d diagonal slices, the vertex lower bound δ*, the finite candidate set,
// the validity/trivializability probe, and the binary-search driver.

#include "persistdist/intersection.hpp"
#include "persistdist/interval.hpp"

#include <vector>

namespace persistdist {

// A closed segment of a diagonal line, in signed d_inf offsets from the
// line's anchor, or the distinguished empty slice.
struct SliceInterval {
    bool empty = true;
    ExtendedScalar lo;
    ExtendedScalar hi;

    static SliceInterval make_empty() { return SliceInterval{}; }
    static SliceInterval range(ExtendedScalar lo, ExtendedScalar hi) {
        return SliceInterval{false, std::move(lo), std::move(hi)};
    }
};

// The 1-parameter slice of the interval along the given diagonal.
SliceInterval slice(const StaircaseInterval& interval, const DiagonalLine& line);

// Interleaving distance of two 1-parameter interval modules:
//   min( max(|a.lo - b.lo|, |a.hi - b.hi|),  max(len(a), len(b)) / 2 )
// where an empty slice contributes only its (zero) trivialization term.
ExtendedScalar interleave_1d(const SliceInterval& a, const SliceInterval& b);

// δ* = max over vertices of both intervals of the sliced 1-d distances;
// a lower bound for d_I.
ExtendedScalar delta_star(const StaircaseInterval& m, const StaircaseInterval& n);

struct CandidateSet {
    std::vector<Rational> finite_values;  // strictly increasing
    bool contains_infinity = false;
    Rational epsilon = 1;  // positive, below half of every finite gap
};

// S = { d, d/2 : d = dl(v, C), v a vertex of either interval, C one of the
// four boundary chains }.
CandidateSet candidate_set(const StaircaseInterval& m, const StaircaseInterval& n);

// Condition (ii) of the interleaving criterion at the probe value d':
// every component of M ∩ shift(N, d') is (M, N_shifted)-valid or has
// d_triv < d', and symmetrically with M and N swapped.  Vacuously true on
// empty intersections.  Decides d_I(M,N) <= δ only for probe values
// δ + ε with δ >= δ*; the driver below guarantees that.
bool probe(const StaircaseInterval& m, const StaircaseInterval& n, const Rational& dprime);

// The exact interleaving distance, +inf when the modules are not
// δ-interleaved for any finite δ.
ExtendedScalar interleaving_distance(const StaircaseInterval& m, const StaircaseInterval& n);

}  // namespace persistdist
