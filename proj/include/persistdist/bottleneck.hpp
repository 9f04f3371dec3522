#pragma once

// Bottleneck distance between interval decomposable modules given by their
// interval summands: pairwise interleaving distances plus trivialization
// thresholds, probed by perfect matching on the standard augmented bipartite
// graph.

#include "persistdist/interleaving.hpp"
#include "persistdist/interval.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace persistdist {

struct DistanceMatrix {
    std::size_t rows = 0;  // summands of the left module
    std::size_t cols = 0;  // summands of the right module
    std::vector<ExtendedScalar> entries;   // rows*cols, row-major: d_I(M_i, N_j)
    std::vector<ExtendedScalar> row_triv;  // τ(M_i)
    std::vector<ExtendedScalar> col_triv;  // τ(N_j)

    const ExtendedScalar& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

// All pairwise interleaving distances and trivial thresholds.  Entries are
// independent; computation is spread over threads capped by the
// PERSISTDIST_THREADS environment variable.
DistanceMatrix pairwise_matrix(const IntervalModule& ms, const IntervalModule& ns);

// Whether a matching exists in which matched pairs satisfy d_ij <= delta and
// every unmatched summand satisfies τ <= delta.
bool delta_matched(const DistanceMatrix& matrix, const ExtendedScalar& delta);

ExtendedScalar bottleneck_distance(const IntervalModule& ms, const IntervalModule& ns);

// Bottleneck distance plus a witnessing matching at the optimum.
struct BottleneckResult {
    ExtendedScalar distance;
    std::vector<std::pair<std::size_t, std::size_t>> matching;
    std::vector<std::size_t> unmatched_left;
    std::vector<std::size_t> unmatched_right;
};

BottleneckResult bottleneck_with_matching(const IntervalModule& ms, const IntervalModule& ns);

}  // namespace persistdist
