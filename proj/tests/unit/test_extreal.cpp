#include "persistdist/extreal.hpp"
#include "persistdist/interval.hpp"

#include "support/helpers.hpp"

#include <doctest.h>

#include <random>

using namespace persistdist;
using namespace persistdist::testing;

TEST_CASE("extended scalars order totally with infinities at the ends") {
    const ExtendedScalar pinf = ExtendedScalar::pos_inf();
    const ExtendedScalar ninf = ExtendedScalar::neg_inf();
    CHECK(ninf < rat(-1000000));
    CHECK(rat(1000000) < pinf);
    CHECK(ninf < pinf);
    CHECK(rat(1, 3) < rat(1, 2));
    CHECK(pinf == ExtendedScalar::pos_inf());
    CHECK(-pinf == ninf);
}

TEST_CASE("ext_add absorbs infinities") {
    CHECK(ext_add(ExtendedScalar::pos_inf(), 5) == ExtendedScalar::pos_inf());
    CHECK(ext_add(rat(3), 2) == rat(5));
    CHECK(ext_add(ExtendedScalar::neg_inf(), -7) == ExtendedScalar::neg_inf());
}

TEST_CASE("ext_add is monotone and order preserving") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 9);
    for (int t = 0; t < 200; ++t) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng)), d(num(rng), den(rng));
        ExtendedScalar ea(a), eb(b);
        if (a < b) CHECK(ext_add(ea, d) < ext_add(eb, d));
        Rational d2 = d + Rational(num(rng) < 0 ? 1 : 2, den(rng));
        CHECK(ext_add(ea, d) < ext_add(ea, d2));
        CHECK(ext_add(ExtendedScalar::pos_inf(), d) == ExtendedScalar::pos_inf());
    }
}

TEST_CASE("dist_inf follows the boundary-at-infinity convention") {
    CHECK(dist_inf(pt(0, 0), pt(2, 1)) == rat(2));
    CHECK(dist_inf(Point{rat(3), ExtendedScalar::pos_inf()},
                   Point{rat(5), ExtendedScalar::pos_inf()}) == rat(2));
    CHECK(dist_inf(pt(0, 0), Point{rat(0), ExtendedScalar::pos_inf()}) ==
          ExtendedScalar::pos_inf());
}

TEST_CASE("dist_inf is a metric on finite points") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coord(-20, 20);
    for (int t = 0; t < 200; ++t) {
        const Point p = pt(coord(rng), coord(rng));
        const Point q = pt(coord(rng), coord(rng));
        const Point r = pt(coord(rng), coord(rng));
        CHECK(dist_inf(p, p) == rat(0));
        CHECK(dist_inf(p, q) == dist_inf(q, p));
        CHECK(dist_inf(p, r) <= ext_add(dist_inf(p, q), dist_inf(q, r).value()));
    }
}

TEST_CASE("diagonal projection onto boundary chains") {
    const StaircaseInterval sq = square(0, 2);

    auto hit = diag_project_chain(pt(3, 3), sq.upper());
    REQUIRE(hit.has_value());
    CHECK(hit->point == pt(2, 2));
    CHECK(hit->dist == rat(1));

    hit = diag_project_chain(pt(0, -1), sq.lower());
    REQUIRE(hit.has_value());
    CHECK(hit->point == pt(1, 0));
    CHECK(hit->dist == rat(1));

    CHECK_FALSE(diag_project_chain(pt(5, 0), sq.lower()).has_value());
}

TEST_CASE("diagonal projection returns a chain point on the diagonal") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> coord(-6, 10);
    const StaircaseInterval shapes[] = {square(0, 2), l_shape(), anti_l_shape()};
    for (int t = 0; t < 400; ++t) {
        const StaircaseInterval& s = shapes[t % 3];
        const Point x = pt(coord(rng), coord(rng));
        for (const MonotoneChain* chain : {&s.lower(), &s.upper()}) {
            auto hit = diag_project_chain(x, *chain);
            const ExtendedScalar lin = linear_diag_distance(x, *chain);
            if (!hit) {
                CHECK(lin == ExtendedScalar::pos_inf());
                continue;
            }
            CHECK(hit->dist == lin);
            CHECK(chain_contains(*chain, hit->point));
            CHECK(Rational(hit->point.y.value() - hit->point.x.value()) ==
                  Rational(x.y.value() - x.x.value()));
        }
    }
}

TEST_CASE("dl is 1-Lipschitz along facets and diagonals") {
    // |dl(x, L) - dl(x', L)| <= d_inf(x, x') for x, x' on a common
    // axis-parallel segment or a common diagonal, both projections defined.
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> coord(-4, 8), offs(-5, 5);
    const StaircaseInterval shapes[] = {square(0, 2), l_shape(), anti_l_shape()};
    int checked = 0;
    for (int t = 0; t < 2000 && checked < 300; ++t) {
        const StaircaseInterval& s = shapes[t % 3];
        const MonotoneChain& chain = (t % 2 == 0) ? s.upper() : s.lower();
        const Point x = pt(coord(rng), coord(rng));
        Point x2 = x;
        switch (t % 3) {
        case 0: x2.x = ext_add(x.x, offs(rng)); break;                          // horizontal
        case 1: x2.y = ext_add(x.y, offs(rng)); break;                          // vertical
        default: {
            const long d = offs(rng);
            x2.x = ext_add(x.x, d);
            x2.y = ext_add(x.y, d);  // same diagonal
        }
        }
        auto h1 = diag_project_chain(x, chain);
        auto h2 = diag_project_chain(x2, chain);
        if (!h1 || !h2) continue;
        ++checked;
        CHECK(ext_abs_diff(h1->dist, h2->dist) <= dist_inf(x, x2));
    }
    CHECK(checked >= 300);
}

TEST_CASE("diagonal lines compare by intercept and boundary edge") {
    CHECK(same_line({pt(0, 0)}, {pt(5, 5)}));
    CHECK_FALSE(same_line({pt(0, 0)}, {pt(0, 1)}));
    const ExtendedScalar inf = ExtendedScalar::pos_inf();
    CHECK(same_line({Point{rat(3), inf}}, {Point{rat(7), inf}}));
    CHECK_FALSE(same_line({Point{rat(3), inf}}, {Point{inf, rat(3)}}));
    CHECK(same_line({Point{inf, inf}}, {Point{inf, inf}}));
    CHECK_FALSE(same_line({Point{inf, inf}}, {Point{ExtendedScalar::neg_inf(), inf}}));
}
