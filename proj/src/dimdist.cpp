#include "persistdist/dimdist.hpp"

#include <algorithm>
#include <cassert>

namespace persistdist {

namespace {

std::vector<std::int64_t> zero_index(std::size_t n) { return std::vector<std::int64_t>(n, 0); }

bool advance(std::vector<std::int64_t>& idx, const std::vector<std::size_t>& shape) {
    for (std::size_t a = shape.size(); a-- > 0;) {
        if (++idx[a] < static_cast<std::int64_t>(shape[a])) return true;
        idx[a] = 0;
    }
    return false;
}

std::size_t flat_offset(const std::vector<std::int64_t>& idx, const std::vector<std::size_t>& shape) {
    std::size_t off = 0;
    for (std::size_t a = 0; a < shape.size(); ++a) off = off * shape[a] + static_cast<std::size_t>(idx[a]);
    return off;
}

GridFunction split_positive(const GridDifferential& d, bool positive) {
    GridFunction out{d.shape, d.values};
    for (auto& v : out.values)
        v = positive ? std::max<std::int64_t>(v, 0) : std::min<std::int64_t>(v, 0);
    return out;
}

GridFunction shifted_sum(const GridFunction& advanced, const GridFunction& retarded,
                         std::int64_t delta) {
    assert(delta >= 0);
    GridFunction out{advanced.shape, std::vector<std::int64_t>(advanced.cell_count(), 0)};
    std::vector<std::int64_t> idx = zero_index(out.axis_count());
    std::vector<std::int64_t> up(idx.size()), down(idx.size());
    std::size_t off = 0;
    do {
        for (std::size_t a = 0; a < idx.size(); ++a) {
            up[a] = idx[a] + delta;
            down[a] = idx[a] - delta;
        }
        out.values[off++] = advanced.sample_clamped(up) + retarded.sample_clamped(down);
    } while (advance(idx, out.shape));
    return out;
}

bool leq_pointwise(const GridFunction& f, const GridFunction& g) {
    for (std::size_t k = 0; k < f.cell_count(); ++k)
        if (f.values[k] > g.values[k]) return false;
    return true;
}

struct SignedParts {
    GridFunction positive;  // f_{Σ+}
    GridFunction negative;  // f_{Σ-}
};

SignedParts signed_parts(const GridFunction& f) {
    const GridDifferential d = differential(f);
    return SignedParts{accumulate(split_positive(d, true)), accumulate(split_positive(d, false))};
}

}  // namespace

std::int64_t GridFunction::sample_clamped(const std::vector<std::int64_t>& idx) const {
    std::size_t off = 0;
    for (std::size_t a = 0; a < shape.size(); ++a) {
        std::int64_t i = idx[a];
        if (i < 0) return 0;
        if (i >= static_cast<std::int64_t>(shape[a])) i = static_cast<std::int64_t>(shape[a]) - 1;
        off = off * shape[a] + static_cast<std::size_t>(i);
    }
    return values[off];
}

GridDifferential differential(const GridFunction& f) {
    const std::size_t n = f.axis_count();
    GridDifferential out{f.shape, std::vector<std::int64_t>(f.cell_count(), 0)};
    std::vector<std::int64_t> idx = zero_index(n);
    std::vector<std::int64_t> probe(n);
    std::size_t off = 0;
    do {
        std::int64_t acc = 0;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            for (std::size_t a = 0; a < n; ++a)
                probe[a] = idx[a] - ((mask >> a) & 1u);
            const std::int64_t term = f.sample_clamped(probe);  // below-grid probes give 0
            acc += (__builtin_popcount(mask) % 2 == 0) ? term : -term;
        }
        out.values[off++] = acc;
    } while (advance(idx, f.shape));
    return out;
}

GridFunction accumulate(const GridDifferential& d) {
    GridFunction out{d.shape, d.values};
    const std::size_t n = out.axis_count();
    // one inclusive prefix scan per axis
    std::size_t stride = 1;
    for (std::size_t a = n; a-- > 0;) {
        const std::size_t extent = out.shape[a];
        const std::size_t block = stride * extent;
        for (std::size_t base = 0; base < out.cell_count(); base += block)
            for (std::size_t i = 1; i < extent; ++i)
                for (std::size_t k = 0; k < stride; ++k)
                    out.values[base + i * stride + k] += out.values[base + (i - 1) * stride + k];
        stride = block;
    }
    return out;
}

GridFunction extend(const GridFunction& f, std::int64_t delta) {
    const SignedParts parts = signed_parts(f);
    return shifted_sum(parts.positive, parts.negative, delta);
}

GridFunction shrink(const GridFunction& f, std::int64_t delta) {
    const SignedParts parts = signed_parts(f);
    return shifted_sum(parts.negative, parts.positive, delta);
}

DimensionDistances dimension_distance(const GridFunction& f, const GridFunction& g) {
    if (f.shape != g.shape)
        throw ShapeMismatch("grid functions must share a shape to be compared");

    const SignedParts pf = signed_parts(f);
    const SignedParts pg = signed_parts(g);
    std::int64_t max_extent = 0;
    for (std::size_t e : f.shape) max_extent = std::max<std::int64_t>(max_extent, static_cast<std::int64_t>(e));

    auto within_shrink = [&](std::int64_t delta) {
        return leq_pointwise(shifted_sum(pg.negative, pg.positive, delta), f) &&
               leq_pointwise(shifted_sum(pf.negative, pf.positive, delta), g);
    };
    auto within_extend = [&](std::int64_t delta) {
        return leq_pointwise(f, shifted_sum(pg.positive, pg.negative, delta)) &&
               leq_pointwise(g, shifted_sum(pf.positive, pf.negative, delta));
    };
    auto search = [&](auto&& pred) -> std::optional<std::int64_t> {
        if (!pred(max_extent)) return std::nullopt;  // saturated beyond the grid
        std::int64_t lo = 0, hi = max_extent;
        while (lo < hi) {
            const std::int64_t mid = lo + (hi - lo) / 2;
            if (pred(mid))
                hi = mid;
            else
                lo = mid + 1;
        }
        return lo;
    };

    DimensionDistances out;
    out.d_minus = search(within_shrink);
    out.d_plus = search(within_extend);
    if (out.d_minus && out.d_plus)
        out.d_zero = std::min(*out.d_minus, *out.d_plus);
    else
        out.d_zero = out.d_minus ? out.d_minus : out.d_plus;
    return out;
}

GridFunction dimension_function(const IntervalModule& module,
                                const std::vector<std::size_t>& shape, const Point& origin,
                                const Rational& spacing) {
    assert(shape.size() == 2);
    assert(origin.x.is_finite() && origin.y.is_finite());
    GridFunction out{shape, std::vector<std::int64_t>(shape[0] * shape[1], 0)};
    std::size_t off = 0;
    for (std::size_t i = 0; i < shape[0]; ++i) {
        const ExtendedScalar x(Rational(origin.x.value() + spacing * static_cast<long>(i)));
        for (std::size_t j = 0; j < shape[1]; ++j, ++off) {
            const Point p{x, ExtendedScalar(Rational(origin.y.value() + spacing * static_cast<long>(j)))};
            std::int64_t count = 0;
            for (const auto& summand : module.summands)
                if (contains(summand, p)) ++count;
            out.values[off] = count;
        }
    }
    return out;
}

}  // namespace persistdist
