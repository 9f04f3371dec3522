#pragma once

// Deterministic random staircase intervals for the oracle-check command and
// the test suites.  Vertices are integers inside the configured box; the
// construction keeps consecutive slab columns overlapping by at least one
// unit so the discretely-presented (manifold boundary) condition always
// holds without rejection sampling.

#include "persistdist/interval.hpp"

#include <cstdint>
#include <random>

namespace persistdist {

struct StaircaseGenOptions {
    long min_coord = 0;
    long max_coord = 8;
    int max_steps = 3;
    bool allow_degenerate = true;  // occasionally emit single points and segments
};

StaircaseInterval random_staircase(std::mt19937_64& rng, const StaircaseGenOptions& opt = {});

IntervalModule random_module(std::mt19937_64& rng, std::size_t max_summands,
                             const StaircaseGenOptions& opt = {});

// Deterministic near-diagonal staircase band with roughly `total_vertices`
// vertices over both chains, for performance measurements.
StaircaseInterval big_staircase(std::size_t total_vertices, long x_offset, long y_offset);

}  // namespace persistdist
