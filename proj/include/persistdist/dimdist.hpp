#pragma once

// Integer-valued functions on finite n-dimensional grids, their
// inclusion-exclusion differentials, δ-extension/shrinking, and the
// dimension distance d_0 — the efficiently computable lower bound for the
// interleaving distance of nice modules.

#include "persistdist/errors.hpp"
#include "persistdist/extreal.hpp"
#include "persistdist/interval.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace persistdist {

struct GridFunction {
    std::vector<std::size_t> shape;   // extent per axis; axis 0 is slowest
    std::vector<std::int64_t> values;  // row-major, size = product of shape

    std::size_t axis_count() const { return shape.size(); }
    std::size_t cell_count() const { return values.size(); }

    // Lower-set / continuation convention: any coordinate below the grid
    // yields 0; coordinates above the grid clamp to the last index (for the
    // cumulative functions this continues them with their final values).
    std::int64_t sample_clamped(const std::vector<std::int64_t>& idx) const;

    bool operator==(const GridFunction& o) const { return shape == o.shape && values == o.values; }
};

using GridDifferential = GridFunction;

// Δf(x) = Σ_{s ⊆ axes} (-1)^{|s|} f(x - 1_s), with f = 0 below the grid.
GridDifferential differential(const GridFunction& f);

// f(x) = Σ_{y <= x} Δf(y); inverse of `differential`.
GridFunction accumulate(const GridDifferential& d);

// f^{+δ} and f^{-δ}: the positive part of the differential advanced /
// retarded against the negative part by δ grid units.
GridFunction extend(const GridFunction& f, std::int64_t delta);
GridFunction shrink(const GridFunction& f, std::int64_t delta);

struct DimensionDistances {
    std::optional<std::int64_t> d_minus;
    std::optional<std::int64_t> d_plus;
    std::optional<std::int64_t> d_zero;  // min of the two
};

// Least δ with f, g within δ-shrinking (d_-) and within δ-extension (d_+),
// each by binary search over δ in [0, max extent]; nullopt encodes +inf.
// Throws ShapeMismatch when the grids differ in shape.
DimensionDistances dimension_distance(const GridFunction& f, const GridFunction& g);

// Samples dim(M_x) = number of summand intervals containing x over the grid
// origin + index * spacing (2-parameter grids).
GridFunction dimension_function(const IntervalModule& module,
                                const std::vector<std::size_t>& shape, const Point& origin,
                                const Rational& spacing);

}  // namespace persistdist
