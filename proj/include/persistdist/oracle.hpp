#pragma once

// Independent brute-force verifiers.  oracle_is_interleaved decides
// δ-interleaving straight from the definition: it enumerates all 0/1
// assignments to the intersection components (any morphism is constant on a
// component and zero elsewhere) and checks square and triangular
// commutativity on a sample grid fine enough to hit every cell of the
// induced arrangement.  None of this calls the validity or trivializability
// predicates, so agreement with the main algorithm is meaningful evidence.

#include "persistdist/intersection.hpp"
#include "persistdist/interval.hpp"

#include <cstddef>
#include <vector>

namespace persistdist {

struct OracleLimits {
    std::size_t max_components = 12;  // cap on c1 + c2 before enumeration
    std::size_t max_summands = 8;     // cap on m + n for matching enumeration
};

// Discretization carrier: every breakpoint of every involved boundary
// (including the ±δ and ±2δ shifted copies), midpoints of consecutive
// values, and one coordinate beyond each extreme.
struct SampleGrid {
    std::vector<Rational> xs;
    std::vector<Rational> ys;
};

SampleGrid build_sample_grid(const StaircaseInterval& m, const StaircaseInterval& n,
                             const Rational& delta);

// Exhaustive δ-interleaving decision for finite-vertex intervals.
// Throws TooManyComponents past the configured bound and
// std::invalid_argument on intervals with vertices at infinity.
bool oracle_is_interleaved(const StaircaseInterval& m, const StaircaseInterval& n,
                           const Rational& delta, const OracleLimits& limits = {});

// Ascending scan over the candidate set; the first candidate whose
// δ+ε probe is interleaved, +inf if none is.
ExtendedScalar oracle_distance(const StaircaseInterval& m, const StaircaseInterval& n,
                               const OracleLimits& limits = {});

// Exhaustive minimum over all partial bijections of max(matched d_I,
// unmatched τ).  Throws SizeLimitExceeded past max_summands.
ExtendedScalar oracle_bottleneck(const IntervalModule& ms, const IntervalModule& ns,
                                 const OracleLimits& limits = {});

// Sample-grid evaluation of the pointwise validity definition: for every
// grid point x in Q, grid points y <= x in I_M lie in I_N and grid points
// z >= x in I_N lie in I_M.
bool rasterized_is_valid(const IntersectionComponent& q, const StaircaseInterval& m,
                         const StaircaseInterval& n);

// Supremum of d_triv over the sample-grid points on the boundary of Q.
ExtendedScalar rasterized_d_triv_sup(const IntersectionComponent& q, const StaircaseInterval& m,
                                     const StaircaseInterval& n);

}  // namespace persistdist
