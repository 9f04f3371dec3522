#pragma once

// Connected components of the intersection of two staircase intervals, and
// the validity / trivializability predicates the interleaving criterion is
// built from.

#include "persistdist/interval.hpp"

#include <vector>

namespace persistdist {

struct IntersectionComponent {
    StaircaseInterval region;
};

// The connected components of A ∩ B as staircase intervals (possibly
// degenerate), ordered lexicographically by top-left extreme; empty when the
// intervals are disjoint.  Closed regions that share only a boundary point
// count as connected.
std::vector<IntersectionComponent> intersect_components(const StaircaseInterval& a,
                                                        const StaircaseInterval& b);

// (M,N)-validity of a component Q of M ∩ N, by the vertex criterion:
// every lower-chain vertex of Q lies on L(I_M) and every upper-chain vertex
// on U(I_N).
bool is_valid(const IntersectionComponent& q, const StaircaseInterval& m,
              const StaircaseInterval& n);

// d_triv^{(M,N)}(I_Q) = max over vertices x of Q of
// max(dl(x, U(I_M)), dl(x, L(I_N))) / 2.  Q is δ-trivializable iff this
// value is strictly below δ.
ExtendedScalar d_triv(const IntersectionComponent& q, const StaircaseInterval& m,
                      const StaircaseInterval& n);

}  // namespace persistdist
