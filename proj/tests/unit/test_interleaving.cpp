#include "persistdist/generator.hpp"
#include "persistdist/interleaving.hpp"

#include "support/helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace persistdist;
using namespace persistdist::testing;

TEST_CASE("slices of the square") {
    const StaircaseInterval sq = square(0, 2);

    SliceInterval s = slice(sq, {pt(0, 0)});
    REQUIRE_FALSE(s.empty);
    CHECK(s.lo == rat(0));
    CHECK(s.hi == rat(2));

    s = slice(sq, {pt(0, 2)});
    REQUIRE_FALSE(s.empty);
    CHECK(s.lo == rat(0));
    CHECK(s.hi == rat(0));

    CHECK(slice(sq, {pt(5, 0)}).empty);
}

TEST_CASE("slices of unbounded intervals") {
    const StaircaseInterval q = quadrant(0);

    SliceInterval s = slice(q, {pt(1, 1)});
    REQUIRE_FALSE(s.empty);
    CHECK(s.lo == rat(-1));
    CHECK(s.hi == ExtendedScalar::pos_inf());

    // anchor on the top boundary edge
    s = slice(q, {Point{rat(3), ExtendedScalar::pos_inf()}});
    REQUIRE_FALSE(s.empty);
    CHECK(s.lo == rat(-3));
    CHECK(s.hi == ExtendedScalar::pos_inf());

    // the two-infinite corner anchor degenerates to a point slice
    s = slice(q, {Point{ExtendedScalar::pos_inf(), ExtendedScalar::pos_inf()}});
    REQUIRE_FALSE(s.empty);
    CHECK(s.lo == rat(0));
    CHECK(s.hi == rat(0));

    CHECK(slice(square(0, 2), {Point{rat(3), ExtendedScalar::pos_inf()}}).empty);
}

TEST_CASE("1-d interleaving distance") {
    auto seg = [](long a, long b) { return SliceInterval::range(rat(a), rat(b)); };
    CHECK(interleave_1d(seg(0, 10), seg(2, 8)) == rat(2));
    CHECK(interleave_1d(seg(0, 2), seg(10, 12)) == rat(1));
    CHECK(interleave_1d(seg(0, 4), SliceInterval::make_empty()) == rat(2));
    CHECK(interleave_1d(SliceInterval::make_empty(), SliceInterval::make_empty()) == rat(0));

    // unbounded slices: matching infinite ends shift freely
    auto ray = [](long a) { return SliceInterval::range(rat(a), ExtendedScalar::pos_inf()); };
    CHECK(interleave_1d(ray(0), ray(2)) == rat(2));
    CHECK(interleave_1d(ray(0), seg(0, 5)) == ExtendedScalar::pos_inf());
}

TEST_CASE("delta star at vertices") {
    CHECK(delta_star(square(0, 2), square(0, 2)) == rat(0));
    CHECK(delta_star(square(0, 2), square(1, 3)) == rat(1));
    CHECK(delta_star(square(0, 2), square(30, 32)) == rat(1));
    CHECK(delta_star(quadrant(0), square(0, 2)) == ExtendedScalar::pos_inf());
}

TEST_CASE("candidate set contents") {
    const CandidateSet s = candidate_set(square(0, 2), square(0, 2));
    auto has = [&s](long num, long den = 1) {
        return std::binary_search(s.finite_values.begin(), s.finite_values.end(),
                                  Rational(num, den));
    };
    CHECK(has(0));
    CHECK(has(1));
    CHECK(has(2));
    CHECK_FALSE(s.contains_infinity);

    CHECK(candidate_set(square(0, 2), square(10, 12)).contains_infinity);

    const StaircaseInterval p = single_point(1, 1);
    const CandidateSet sp = candidate_set(p, p);
    CHECK(sp.finite_values == std::vector<Rational>{Rational(0)});
    CHECK(sp.epsilon == Rational(1));
}

TEST_CASE("candidate epsilon sits below every gap") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 40; ++t) {
        const CandidateSet s = candidate_set(random_staircase(rng), random_staircase(rng));
        CHECK(s.epsilon > 0);
        for (std::size_t i = 0; i + 1 < s.finite_values.size(); ++i)
            CHECK(s.epsilon < (s.finite_values[i + 1] - s.finite_values[i]) / 2);
    }
}

TEST_CASE("probe at the criterion values") {
    CHECK(probe(square(0, 2), square(1, 3), Rational(1) + Rational(1, 100)));
    CHECK_FALSE(probe(square(0, 2), square(1, 3), Rational(1, 2)));
    CHECK(probe(square(0, 2), square(30, 32), Rational(1) + Rational(1, 100)));  // vacuous
}

TEST_CASE("interleaving distance on knowns") {
    CHECK(interleaving_distance(square(0, 2), square(0, 2)) == rat(0));
    CHECK(interleaving_distance(square(0, 2), square(1, 3)) == rat(1));
    CHECK(interleaving_distance(square(0, 2), square(30, 32)) == rat(1));

    // free modules at (0,0) and (1,1)
    CHECK(interleaving_distance(quadrant(0), quadrant(1)) == rat(1));
    // a quadrant against a bounded square cannot be finitely interleaved
    CHECK(interleaving_distance(quadrant(0), square(0, 2)) == ExtendedScalar::pos_inf());

    // degenerate summands
    CHECK(interleaving_distance(single_point(1, 1), single_point(1, 1)) == rat(0));
    CHECK(interleaving_distance(single_point(0, 0), single_point(4, 4)) == rat(2));
}

TEST_CASE("interleaving distance invariants on random pairs") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 60; ++t) {
        const StaircaseInterval m = random_staircase(rng);
        const StaircaseInterval n = random_staircase(rng);
        const ExtendedScalar d = interleaving_distance(m, n);

        CHECK(d == interleaving_distance(n, m));
        CHECK(d >= delta_star(m, n));
        if (d.is_finite()) {
            const CandidateSet s = candidate_set(m, n);
            CHECK(std::binary_search(s.finite_values.begin(), s.finite_values.end(), d.value()));
        }

        const Rational a(t % 7 - 3, 2);
        CHECK(interleaving_distance(shift(m, a), shift(n, a)) == d);
        CHECK(interleaving_distance(m, shift(m, a)) <= ext_abs_diff(rat(0), ExtendedScalar(a)));
    }
}

TEST_CASE("interleaving distance satisfies the triangle inequality") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 40; ++t) {
        const StaircaseInterval a = random_staircase(rng);
        const StaircaseInterval b = random_staircase(rng);
        const StaircaseInterval c = random_staircase(rng);
        const ExtendedScalar ab = interleaving_distance(a, b);
        const ExtendedScalar bc = interleaving_distance(b, c);
        const ExtendedScalar ac = interleaving_distance(a, c);
        if (ab.is_finite() && bc.is_finite())
            CHECK(ac <= ExtendedScalar(Rational(ab.value() + bc.value())));
    }
}
