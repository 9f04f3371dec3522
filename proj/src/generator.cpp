#include "persistdist/generator.hpp"

#include <algorithm>
#include <set>

namespace persistdist {

namespace {

long pick(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Point pt(long x, long y) { return Point{ExtendedScalar(x), ExtendedScalar(y)}; }

StaircaseInterval degenerate(std::mt19937_64& rng, const StaircaseGenOptions& opt) {
    const long a = pick(rng, opt.min_coord, opt.max_coord);
    const long b = pick(rng, opt.min_coord, opt.max_coord);
    switch (pick(rng, 0, 2)) {
    case 0:  // point
        return StaircaseInterval::validate({pt(a, b)}, {pt(a, b)});
    case 1: {  // horizontal segment
        const auto [x0, x1] = std::minmax(a, pick(rng, opt.min_coord, opt.max_coord));
        return StaircaseInterval::validate({pt(x0, b), pt(x1, b)}, {pt(x0, b), pt(x1, b)});
    }
    default: {  // vertical segment
        const auto [y0, y1] = std::minmax(b, pick(rng, opt.min_coord, opt.max_coord));
        return StaircaseInterval::validate({pt(a, y1), pt(a, y0)}, {pt(a, y1), pt(a, y0)});
    }
    }
}

}  // namespace

StaircaseInterval random_staircase(std::mt19937_64& rng, const StaircaseGenOptions& opt) {
    if (opt.allow_degenerate && pick(rng, 0, 7) == 0) return degenerate(rng, opt);

    const int steps = static_cast<int>(pick(rng, 1, opt.max_steps));
    std::set<long> bx;
    while (static_cast<int>(bx.size()) < steps + 1)
        bx.insert(pick(rng, opt.min_coord, opt.max_coord));
    const std::vector<long> xs(bx.begin(), bx.end());

    // hi_i non-increasing, lo_i non-increasing, lo_i < hi_i, and each slab's
    // top stays strictly above the previous slab's bottom (no pinching)
    std::vector<long> hi(steps), lo(steps);
    hi[0] = pick(rng, opt.min_coord + 1, opt.max_coord);
    lo[0] = pick(rng, opt.min_coord, hi[0] - 1);
    for (int i = 1; i < steps; ++i) {
        hi[i] = pick(rng, lo[i - 1] + 1, hi[i - 1]);
        lo[i] = pick(rng, opt.min_coord, std::min(lo[i - 1], hi[i] - 1));
    }

    std::vector<Point> lower, upper;
    lower.push_back(pt(xs[0], hi[0]));
    lower.push_back(pt(xs[0], lo[0]));
    for (int i = 1; i < steps; ++i) {
        lower.push_back(pt(xs[i], lo[i - 1]));
        lower.push_back(pt(xs[i], lo[i]));
    }
    lower.push_back(pt(xs[steps], lo[steps - 1]));

    upper.push_back(pt(xs[0], hi[0]));
    for (int i = 1; i < steps; ++i) {
        upper.push_back(pt(xs[i], hi[i - 1]));
        upper.push_back(pt(xs[i], hi[i]));
    }
    upper.push_back(pt(xs[steps], hi[steps - 1]));
    upper.push_back(pt(xs[steps], lo[steps - 1]));

    return StaircaseInterval::validate(std::move(lower), std::move(upper));
}

IntervalModule random_module(std::mt19937_64& rng, std::size_t max_summands,
                             const StaircaseGenOptions& opt) {
    IntervalModule out;
    const std::size_t count = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(max_summands)));
    for (std::size_t i = 0; i < count; ++i) out.summands.push_back(random_staircase(rng, opt));
    return out;
}

StaircaseInterval big_staircase(std::size_t total_vertices, long x_offset, long y_offset) {
    // one unit step contributes two vertices to each chain
    const long steps = std::max<long>(2, static_cast<long>(total_vertices) / 4);
    const long band = steps;  // column height
    std::vector<Point> lower, upper;
    lower.reserve(2 * steps + 2);
    upper.reserve(2 * steps + 2);
    auto at = [&](long x, long y) { return pt(x + x_offset, y + y_offset); };

    // descending band: column over [i, i+1] is [band - i, 2 * band - i]
    lower.push_back(at(0, 2 * band));
    lower.push_back(at(0, band));
    for (long i = 1; i < steps; ++i) {
        lower.push_back(at(i, band - i + 1));
        lower.push_back(at(i, band - i));
    }
    lower.push_back(at(steps, band - steps + 1));

    upper.push_back(at(0, 2 * band));
    for (long i = 1; i < steps; ++i) {
        upper.push_back(at(i, 2 * band - i + 1));
        upper.push_back(at(i, 2 * band - i));
    }
    upper.push_back(at(steps, 2 * band - steps + 1));
    upper.push_back(at(steps, band - steps + 1));

    return StaircaseInterval::validate(std::move(lower), std::move(upper));
}

}  // namespace persistdist
