#include "persistdist/generator.hpp"
#include "persistdist/interval.hpp"

#include "support/helpers.hpp"

#include <doctest.h>

#include <random>

using namespace persistdist;
using namespace persistdist::testing;

TEST_CASE("validate canonicalizes the square") {
    const StaircaseInterval sq =
        StaircaseInterval::validate({pt(0, 2), pt(0, 1), pt(0, 0), pt(1, 0), pt(2, 0)},
                                    {pt(0, 2), pt(2, 2), pt(2, 0)});
    CHECK(sq == square(0, 2));
    CHECK(sq.lower().size() == 3);  // collinear vertices merged
}

TEST_CASE("validate names the violated invariant") {
    CHECK_THROWS_WITH_AS(
        StaircaseInterval::validate({pt(0, 0), pt(2, 0)}, {pt(0, 0), pt(0, 2), pt(2, 2)}),
        doctest::Contains("ChainsEndpointMismatch"), ValidationError);

    // inverted chains: the given lower chain lies above the given upper one
    CHECK_THROWS_WITH_AS(
        StaircaseInterval::validate({pt(0, 2), pt(1, 2), pt(1, 0)}, {pt(0, 2), pt(0, 0), pt(1, 0)}),
        doctest::Contains("EmptyRegion"), ValidationError);

    CHECK_THROWS_WITH_AS(
        StaircaseInterval::validate({pt(0, 2), pt(1, 1), pt(1, 0)}, {pt(0, 2), pt(1, 2), pt(1, 0)}),
        doctest::Contains("NonRectilinearEdge"), ValidationError);

    CHECK_THROWS_WITH_AS(
        StaircaseInterval::validate({pt(0, 2), pt(0, 0), pt(2, 0), pt(1, 0)},
                                    {pt(0, 2), pt(1, 2), pt(1, 0)}),
        doctest::Contains("NonMonotoneChain"), ValidationError);

    // square with a whisker: chains meet along [2,4] x {0}
    CHECK_THROWS_WITH_AS(
        StaircaseInterval::validate({pt(0, 2), pt(0, 0), pt(4, 0)},
                                    {pt(0, 2), pt(2, 2), pt(2, 0), pt(4, 0)}),
        doctest::Contains("SelfTouchingChains"), ValidationError);

    // interior pinch: lower and upper chains cross at the single point (2,2)
    CHECK_THROWS_WITH_AS(
        StaircaseInterval::validate({pt(0, 4), pt(0, 2), pt(2, 2), pt(2, 0), pt(4, 0)},
                                    {pt(0, 4), pt(2, 4), pt(2, 2), pt(4, 2), pt(4, 0)}),
        doctest::Contains("SelfTouchingChains"), ValidationError);
}

TEST_CASE("degenerate intervals are first class") {
    CHECK_NOTHROW(single_point(1, 1));
    CHECK_NOTHROW(StaircaseInterval::validate({pt(0, 0), pt(4, 0)}, {pt(0, 0), pt(4, 0)}));
    CHECK_NOTHROW(StaircaseInterval::validate({pt(0, 4), pt(0, 0)}, {pt(0, 4), pt(0, 0)}));
}

TEST_CASE("containment on the closed region") {
    const StaircaseInterval sq = square(0, 2);
    CHECK(contains(sq, pt(1, 1)));
    CHECK(contains(sq, pt(2, 2)));
    CHECK_FALSE(contains(sq, pt(Rational(5, 2), Rational(1))));
}

TEST_CASE("containment matches the rasterized membership oracle") {
    std::mt19937_64 rng(5);
    StaircaseGenOptions opt;
    for (int t = 0; t < 60; ++t) {
        const StaircaseInterval s = random_staircase(rng, opt);
        const auto samples = half_integer_samples({&s});
        for (const Rational& x : samples)
            for (const Rational& y : samples) {
                const Point p = pt(x, y);
                CHECK(contains(s, p) == linear_contains(s, p));
            }
    }
}

TEST_CASE("shift translates against the shift direction") {
    CHECK(shift(square(1, 3), 1) == square(0, 2));
    CHECK(shift(square(0, 2), 0) == square(0, 2));

    const StaircaseInterval q = quadrant(0);
    const StaircaseInterval shifted = shift(q, 1);
    CHECK(shifted.top_left() == Point{rat(-1), ExtendedScalar::pos_inf()});
    CHECK(shifted == quadrant(-1));
}

TEST_CASE("shift round-trips exactly") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 50; ++t) {
        const StaircaseInterval s = random_staircase(rng);
        const Rational a(t - 25, (t % 3) + 1);
        CHECK(shift(shift(s, a), -a) == s);
    }
}

TEST_CASE("boundary vertex sets share the extremes") {
    auto [vl, vu] = boundary_vertices(square(0, 2));
    CHECK(vl == std::vector<Point>{pt(0, 2), pt(0, 0), pt(2, 0)});
    CHECK(vu == std::vector<Point>{pt(0, 2), pt(2, 2), pt(2, 0)});

    auto [pl, pu] = boundary_vertices(single_point(1, 1));
    CHECK(pl == std::vector<Point>{pt(1, 1)});
    CHECK(pu == pl);

    auto [ll, lu] = boundary_vertices(l_shape());
    CHECK(lu == std::vector<Point>{pt(0, 3), pt(1, 3), pt(1, 1), pt(3, 1), pt(3, 0)});
}

TEST_CASE("trivial threshold") {
    CHECK(trivial_threshold(square(0, 2)) == rat(1));
    CHECK(trivial_threshold(single_point(3, 5)) == rat(0));
    CHECK(trivial_threshold(quadrant(0)) == ExtendedScalar::pos_inf());
}

TEST_CASE("trivial threshold is realized at a lower-chain vertex") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 40; ++t) {
        const StaircaseInterval s = random_staircase(rng);
        const ExtendedScalar tau = trivial_threshold(s);

        // rasterized sup of dl(x, U(I)) over boundary samples, via the
        // independent linear projection
        ExtendedScalar sup(0);
        const auto samples = half_integer_samples({&s});
        for (const Rational& x : samples)
            for (const Rational& y : samples) {
                const Point p = pt(x, y);
                if (!linear_contains(s, p)) continue;
                const ExtendedScalar d = linear_diag_distance(p, s.upper());
                if (d > sup) sup = d;
            }
        CHECK(tau == ext_half(sup));
    }
}
