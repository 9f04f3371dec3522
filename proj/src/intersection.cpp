#include "persistdist/intersection.hpp"

#include <algorithm>
#include <cassert>

namespace persistdist {

std::vector<IntersectionComponent> intersect_components(const StaircaseInterval& a,
                                                        const StaircaseInterval& b) {
    const ExtendedScalar x_min = ext_max(a.top_left().x, b.top_left().x);
    const ExtendedScalar x_max = ext_min(a.bottom_right().x, b.bottom_right().x);
    if (x_min > x_max) return {};

    const AtomSequence atoms =
        merge_breakpoints({&a.lower(), &a.upper(), &b.lower(), &b.upper()}, x_min, x_max);
    const std::size_t count = atoms.atom_count();

    // Column of A ∩ B at each atom: [max of lower envelopes, min of upper
    // envelopes]; empty columns separate components.
    std::vector<ExtendedScalar> lo(count), hi(count);
    std::vector<bool> filled(count, false);
    for (std::size_t k = 0; k < count; ++k) {
        const ExtendedScalar x = atoms.representative(k);
        auto la = chain_y_range_at(a.lower(), x);
        auto lb = chain_y_range_at(b.lower(), x);
        if (!la || !lb) continue;
        auto ua = chain_y_range_at(a.upper(), x);
        auto ub = chain_y_range_at(b.upper(), x);
        assert(ua && ub);
        ExtendedScalar col_lo = ext_max(la->first, lb->first);
        ExtendedScalar col_hi = ext_min(ua->second, ub->second);
        if (col_lo > col_hi) continue;
        lo[k] = std::move(col_lo);
        hi[k] = std::move(col_hi);
        filled[k] = true;
    }

    // Adjacent nonempty atoms always overlap (a point atom's column contains
    // its neighbouring slab columns), so components are maximal filled runs.
    std::vector<IntersectionComponent> out;
    std::size_t k = 0;
    while (k < count) {
        if (!filled[k]) {
            ++k;
            continue;
        }
        std::size_t end = k;
        while (end + 1 < count && filled[end + 1]) ++end;
        // runs start and end on point atoms
        assert(atoms.is_point_atom(k) && atoms.is_point_atom(end));
        out.push_back(IntersectionComponent{interval_from_columns(atoms, k, end, lo, hi)});
        k = end + 1;
    }
    std::sort(out.begin(), out.end(), [](const IntersectionComponent& p, const IntersectionComponent& q) {
        return lex_less(p.region.top_left(), q.region.top_left());
    });
    return out;
}

bool is_valid(const IntersectionComponent& q, const StaircaseInterval& m,
              const StaircaseInterval& n) {
    for (const Point& v : q.region.lower().vertices)
        if (!chain_contains(m.lower(), v)) return false;
    for (const Point& v : q.region.upper().vertices)
        if (!chain_contains(n.upper(), v)) return false;
    return true;
}

ExtendedScalar d_triv(const IntersectionComponent& q, const StaircaseInterval& m,
                      const StaircaseInterval& n) {
    ExtendedScalar worst(0);
    for (const Point& v : q.region.all_vertices()) {
        worst = ext_max(worst, diag_distance(v, m.upper()));
        worst = ext_max(worst, diag_distance(v, n.lower()));
        if (worst.is_pos_inf()) break;
    }
    return ext_half(worst);
}

}  // namespace persistdist
