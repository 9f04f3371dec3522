#include "persistdist/generator.hpp"
#include "persistdist/intersection.hpp"
#include "persistdist/oracle.hpp"

#include "support/helpers.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <vector>

using namespace persistdist;
using namespace persistdist::testing;

TEST_CASE("rectangle intersections") {
    auto comps = intersect_components(square(0, 2), square(1, 3));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].region == square(1, 2));

    comps = intersect_components(square(0, 1), square(1, 2));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].region == single_point(1, 1));

    CHECK(intersect_components(square(0, 1), square(5, 6)).empty());
}

TEST_CASE("L against anti-L yields two components") {
    auto comps = intersect_components(l_shape(), anti_l_shape());
    REQUIRE(comps.size() == 2);
    // [0,1] x [2,3], then [2,3] x [0,1], ordered by top-left extreme
    CHECK(comps[0].region == StaircaseInterval::validate({pt(0, 3), pt(0, 2), pt(1, 2)},
                                                         {pt(0, 3), pt(1, 3), pt(1, 2)}));
    CHECK(comps[1].region == StaircaseInterval::validate({pt(2, 1), pt(2, 0), pt(3, 0)},
                                                         {pt(2, 1), pt(3, 1), pt(3, 0)}));
}

TEST_CASE("components match the rasterized intersection") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        const StaircaseInterval a = random_staircase(rng);
        const StaircaseInterval b = random_staircase(rng);
        const auto comps = intersect_components(a, b);

        const auto samples = half_integer_samples({&a, &b});
        // membership in the union of components equals membership in both
        // parents; also count rasterized 4-connected components
        std::map<std::pair<Rational, Rational>, bool> member;
        for (const Rational& x : samples)
            for (const Rational& y : samples) {
                const Point p = pt(x, y);
                bool in_union = false;
                for (const auto& q : comps)
                    if (contains(q.region, p)) {
                        in_union = true;
                        break;
                    }
                const bool in_both = linear_contains(a, p) && linear_contains(b, p);
                CHECK(in_union == in_both);
                member[{x, y}] = in_both;
            }

        std::map<std::pair<Rational, Rational>, int> label;
        int raster_components = 0;
        for (const auto& [key, in] : member) {
            if (!in || label.count(key)) continue;
            ++raster_components;
            std::vector<std::pair<Rational, Rational>> stack{key};
            label[key] = raster_components;
            while (!stack.empty()) {
                auto [x, y] = stack.back();
                stack.pop_back();
                const Rational h(1, 2);
                for (const auto& nb : {std::pair{x + h, y}, {x - h, y}, {x, y + h}, {x, y - h}}) {
                    auto it = member.find(nb);
                    if (it == member.end() || !it->second || label.count(nb)) continue;
                    label[nb] = raster_components;
                    stack.push_back(nb);
                }
            }
        }
        CHECK(static_cast<int>(comps.size()) == raster_components);
    }
}

TEST_CASE("validity by the vertex criterion") {
    const IntersectionComponent q{square(1, 2)};
    CHECK_FALSE(is_valid(q, square(0, 2), square(1, 3)));  // (1,1) is not on L([0,2]^2)
    CHECK(is_valid(q, square(1, 3), square(0, 2)));
}

TEST_CASE("validity equals the pointwise definition on random triples") {
    std::mt19937_64 rng(19);
    int checked = 0;
    while (checked < 120) {
        const StaircaseInterval a = random_staircase(rng);
        const StaircaseInterval b = random_staircase(rng);
        for (const auto& q : intersect_components(a, b)) {
            CHECK(is_valid(q, a, b) == rasterized_is_valid(q, a, b));
            CHECK(is_valid(q, b, a) == rasterized_is_valid(q, b, a));
            checked += 2;
        }
    }
}

TEST_CASE("trivializability threshold of components") {
    // Q = [1,2]^2 inside M = [0,2]^2, N = [1,3]^2: realized at (1,1), (2,2)
    const IntersectionComponent q{square(1, 2)};
    CHECK(d_triv(q, square(0, 2), square(1, 3)) == rat(1, 2));

    // identical squares: the far corners realize dl = 2, halved
    const IntersectionComponent whole{square(0, 2)};
    CHECK(d_triv(whole, square(0, 2), square(0, 2)) == rat(1));

    // single interior point: half the larger diagonal clearance
    const IntersectionComponent point{single_point(1, 1)};
    CHECK(d_triv(point, square(0, 2), square(0, 4)) == rat(1, 2));
}

TEST_CASE("d_triv vertex max equals the rasterized boundary sup") {
    std::mt19937_64 rng(29);
    int checked = 0;
    while (checked < 80) {
        const StaircaseInterval a = random_staircase(rng);
        const StaircaseInterval b = random_staircase(rng);
        for (const auto& q : intersect_components(a, b)) {
            CHECK(d_triv(q, a, b) == rasterized_d_triv_sup(q, a, b));
            ++checked;
        }
    }
}
