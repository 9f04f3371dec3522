#include "persistdist/interleaving.hpp"

#include <algorithm>
#include <cassert>

namespace persistdist {

namespace {

// Offsets of the interval's run on one boundary edge of the extended plane,
// relative to an anchor sitting on that edge.  `run` is the coordinate range
// the interval occupies along the edge; infinite endpoints of the run that
// are not reachable by the (finite-parameter) diagonal are kept as unbounded
// slice ends.
SliceInterval edge_slice(const ExtendedScalar& run_lo, const ExtendedScalar& run_hi,
                         const ExtendedScalar& anchor_coord) {
    if (run_lo.is_pos_inf() || run_hi.is_neg_inf()) return SliceInterval::make_empty();
    return SliceInterval::range(ext_sub(run_lo, anchor_coord), ext_sub(run_hi, anchor_coord));
}

// Largest x among the upper chain's leading run at y = +inf.
ExtendedScalar top_run_end(const StaircaseInterval& interval) {
    const auto& vs = interval.upper().vertices;
    std::size_t k = 0;
    while (k + 1 < vs.size() && vs[k + 1].y.is_pos_inf()) ++k;
    return vs[k].x;
}

// Largest y among the upper chain's trailing run at x = +inf.
ExtendedScalar right_run_end(const StaircaseInterval& interval) {
    const auto& vs = interval.upper().vertices;
    std::size_t j = vs.size() - 1;
    while (j > 0 && vs[j - 1].x.is_pos_inf()) --j;
    return vs[j].y;
}

// Smallest x among the lower chain's trailing run at y = -inf.
ExtendedScalar bottom_run_start(const StaircaseInterval& interval) {
    const auto& vs = interval.lower().vertices;
    std::size_t j = vs.size() - 1;
    while (j > 0 && vs[j - 1].y.is_neg_inf()) --j;
    return vs[j].x;
}

// Smallest y among the lower chain's leading run at x = -inf.
ExtendedScalar left_run_start(const StaircaseInterval& interval) {
    const auto& vs = interval.lower().vertices;
    std::size_t k = 0;
    while (k + 1 < vs.size() && vs[k + 1].x.is_neg_inf()) ++k;
    return vs[k].y;
}

ExtendedScalar slice_length(const SliceInterval& s) {
    assert(!s.empty);
    return ext_sub(s.hi, s.lo);
}

}  // namespace

SliceInterval slice(const StaircaseInterval& interval, const DiagonalLine& line) {
    const Point& a = line.anchor;
    const bool xinf = a.x.is_infinite();
    const bool yinf = a.y.is_infinite();

    if (xinf && yinf) {
        if (contains(interval, a)) return SliceInterval::range(ExtendedScalar(0), ExtendedScalar(0));
        return SliceInterval::make_empty();
    }

    if (yinf || xinf) {
        // The line degenerates to one boundary edge of the extended plane.
        if (a.y.is_pos_inf()) {
            if (!interval.top_left().y.is_pos_inf()) return SliceInterval::make_empty();
            return edge_slice(interval.top_left().x, top_run_end(interval), a.x);
        }
        if (a.y.is_neg_inf()) {
            if (!interval.bottom_right().y.is_neg_inf()) return SliceInterval::make_empty();
            return edge_slice(bottom_run_start(interval), interval.bottom_right().x, a.x);
        }
        if (a.x.is_pos_inf()) {
            if (!interval.bottom_right().x.is_pos_inf()) return SliceInterval::make_empty();
            return edge_slice(interval.bottom_right().y, right_run_end(interval), a.y);
        }
        if (!interval.top_left().x.is_neg_inf()) return SliceInterval::make_empty();
        return edge_slice(left_run_start(interval), interval.top_left().y, a.y);
    }

    auto entry = diag_project_chain(a, interval.lower());
    auto exit = diag_project_chain(a, interval.upper());
    if (!entry && !exit) {
        if (contains(interval, a))
            return SliceInterval::range(ExtendedScalar::neg_inf(), ExtendedScalar::pos_inf());
        return SliceInterval::make_empty();
    }
    ExtendedScalar lo = entry ? ext_sub(entry->point.x, a.x) : ExtendedScalar::neg_inf();
    ExtendedScalar hi = exit ? ext_sub(exit->point.x, a.x) : ExtendedScalar::pos_inf();
    assert(lo <= hi);
    return SliceInterval::range(std::move(lo), std::move(hi));
}

ExtendedScalar interleave_1d(const SliceInterval& a, const SliceInterval& b) {
    if (a.empty && b.empty) return ExtendedScalar(0);
    if (a.empty) return ext_half(slice_length(b));
    if (b.empty) return ext_half(slice_length(a));
    ExtendedScalar shift_term = ext_max(ext_abs_diff(a.lo, b.lo), ext_abs_diff(a.hi, b.hi));
    ExtendedScalar triv_term = ext_half(ext_max(slice_length(a), slice_length(b)));
    return ext_min(shift_term, triv_term);
}

ExtendedScalar delta_star(const StaircaseInterval& m, const StaircaseInterval& n) {
    ExtendedScalar best(0);
    auto consider = [&](const std::vector<Point>& vs) {
        for (const Point& v : vs) {
            const DiagonalLine line{v};
            best = ext_max(best, interleave_1d(slice(m, line), slice(n, line)));
            if (best.is_pos_inf()) return;
        }
    };
    consider(m.all_vertices());
    if (!best.is_pos_inf()) consider(n.all_vertices());
    return best;
}

CandidateSet candidate_set(const StaircaseInterval& m, const StaircaseInterval& n) {
    CandidateSet s;
    std::vector<Rational> vals;
    const MonotoneChain* chains[4] = {&m.lower(), &m.upper(), &n.lower(), &n.upper()};
    auto consider = [&](const std::vector<Point>& vs) {
        for (const Point& v : vs) {
            for (const MonotoneChain* c : chains) {
                ExtendedScalar d = diag_distance(v, *c);
                if (d.is_finite()) {
                    vals.push_back(d.value());
                    vals.push_back(d.value() / 2);
                } else {
                    s.contains_infinity = true;
                }
            }
        }
    };
    consider(m.all_vertices());
    consider(n.all_vertices());
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    s.finite_values = std::move(vals);

    s.epsilon = 1;
    for (std::size_t i = 0; i + 1 < s.finite_values.size(); ++i) {
        Rational gap = (s.finite_values[i + 1] - s.finite_values[i]) / 4;
        if (i == 0 || gap < s.epsilon) s.epsilon = gap;
    }
    return s;
}

bool probe(const StaircaseInterval& m, const StaircaseInterval& n, const Rational& dprime) {
    assert(dprime > 0);
    const StaircaseInterval* pairs[2][2] = {{&m, &n}, {&n, &m}};
    for (auto& pair : pairs) {
        const StaircaseInterval& src = *pair[0];
        const StaircaseInterval shifted = shift(*pair[1], dprime);
        for (const IntersectionComponent& q : intersect_components(src, shifted)) {
            if (is_valid(q, src, shifted)) continue;
            if (d_triv(q, src, shifted) < ExtendedScalar(dprime)) continue;
            return false;
        }
    }
    return true;
}

ExtendedScalar interleaving_distance(const StaircaseInterval& m, const StaircaseInterval& n) {
    const ExtendedScalar dstar = delta_star(m, n);
    if (dstar.is_pos_inf()) return dstar;
    const CandidateSet s = candidate_set(m, n);
    const auto& vals = s.finite_values;

    // smallest candidate >= δ*; δ* itself is a member of S
    std::size_t lo = std::lower_bound(vals.begin(), vals.end(), dstar.value()) - vals.begin();
    std::size_t hi = vals.size();
    // first candidate δ with a passing probe at δ + ε; the probe predicate is
    // monotone across candidates because {δ : d_I <= δ} is up-closed and ε
    // lies below every candidate gap
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (probe(m, n, vals[mid] + s.epsilon))
            hi = mid;
        else
            lo = mid + 1;
    }
    if (lo == vals.size()) return ExtendedScalar::pos_inf();
    return ExtendedScalar(vals[lo]);
}

}  // namespace persistdist
