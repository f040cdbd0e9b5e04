#include "digifix/map.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace digifix;

namespace {

std::vector<DigitalImage> small_images()
{
    return {singleton(),
            digital_interval(0, 1),
            digital_interval(0, 3),
            digital_picture({{0, 1}, {0, 1}}),
            build_image(digital_picture({{0, 1}, {0, 1}}).points(), AdjacencySpec::cu(1)),
            simple_closed_curve(4),
            example_4_2_image(),
            build_image({{0}, {3}, {4}}, AdjacencySpec::cu(1))};
}

} // namespace

TEST_SUITE("map") {

TEST_CASE("construction and composition")
{
    const DigitalImage x = digital_interval(0, 2);
    CHECK_THROWS_AS(DigitalMap(x, MapTable{0, 1}), Error);
    CHECK_THROWS_AS(DigitalMap(x, MapTable{0, 1, 3}), Error);
    const DigitalMap f(x, {1, 2, 2});
    const DigitalMap g(x, {0, 0, 1});
    CHECK(f.then(g).table() == MapTable{0, 1, 1});
    CHECK(g.then(f).table() == MapTable{1, 1, 2});
    CHECK(DigitalMap::identity(x).then(f) == f);
    CHECK_THROWS_AS(f.then(DigitalMap::identity(singleton())), Error);
}

TEST_CASE("property: pruned enumeration equals brute-force continuity filter")
{
    for (const DigitalImage& x : small_images()) {
        std::vector<MapTable> oracle;
        for (const MapTable& t : test::all_tables(x.size())) {
            CHECK(is_continuous(DigitalMap(x, t)) == test::naive_continuous(x, t));
            if (test::naive_continuous(x, t))
                oracle.push_back(t);
        }
        std::vector<MapTable> found;
        for (const DigitalMap& f : enumerate_continuous_selfmaps(x))
            found.push_back(f.table());
        CHECK(found == oracle);

        std::size_t visits = 0;
        for_each_selfmap(x, [&](std::span<const Index>) { return ++visits < 1000000; });
        std::size_t expected = 1;
        for (std::size_t i = 0; i < x.size(); ++i)
            expected *= x.size();
        CHECK(visits == expected);
    }
    CHECK(enumerate_continuous_selfmaps(digital_interval(0, 1)).size() == 4);
}

TEST_CASE("property: continuous maps compose, fixed points sit among approximate ones")
{
    auto g = test::rng(30);
    const DigitalImage x = digital_picture({{0, 2}, {0, 1}});
    const auto maps = enumerate_continuous_selfmaps(x);
    for (int trial = 0; trial < 300; ++trial) {
        const DigitalMap& f = maps[test::uniform(g, 0, static_cast<std::int64_t>(maps.size()) - 1)];
        const DigitalMap& h = maps[test::uniform(g, 0, static_cast<std::int64_t>(maps.size()) - 1)];
        CHECK(is_continuous(f.then(h)));

        const DigitalMap r(x, test::random_table(g, x.size()));
        const auto fixed = fixed_points(r);
        const auto approx = approximate_fixed_points(r);
        CHECK(std::includes(approx.begin(), approx.end(), fixed.begin(), fixed.end()));
        CHECK(fixed.size() == fixed_point_count(x, r.table()));
        CHECK(has_approximate_fixed_point(x, r.table()) == !approx.empty());
        for (Index p = 0; p < x.size(); ++p) {
            CHECK((std::find(fixed.begin(), fixed.end(), p) != fixed.end()) == (r(p) == p));
            CHECK((std::find(approx.begin(), approx.end(), p) != approx.end()) == x.adjacent_or_equal(r(p), p));
        }
    }
}

TEST_CASE("onto and constant")
{
    const DigitalImage x = digital_interval(0, 2);
    CHECK(is_onto(DigitalMap(x, {2, 1, 0})));
    CHECK_FALSE(is_onto(DigitalMap(x, {2, 1, 1})));
    CHECK(is_constant(DigitalMap::constant(x, 1)));
    CHECK_FALSE(is_constant(DigitalMap(x, {2, 1, 1})));
    CHECK_THROWS_AS(is_onto(DigitalMap(x, digital_interval(0, 3), {0, 1, 2})), Error);
}

TEST_CASE("permutations")
{
    std::vector<MapTable> perms;
    for_each_permutation(digital_interval(0, 3), [&](std::span<const Index> t) {
        perms.emplace_back(t.begin(), t.end());
        return true;
    });
    CHECK(perms.size() == 24);
    CHECK(std::is_sorted(perms.begin(), perms.end()));
    CHECK(std::adjacent_find(perms.begin(), perms.end()) == perms.end());
}

TEST_CASE("fixed point property only on a singleton")
{
    CHECK(has_fpp(singleton()).holds);
    for (const DigitalImage& x : small_images()) {
        if (x.size() == 1)
            continue;
        const PropertyVerdict v = has_fpp(x);
        CHECK_FALSE(v.holds);
        REQUIRE(v.witness);
        CHECK(is_continuous(*v.witness));
        CHECK(fixed_points(*v.witness).empty());
    }
}

TEST_CASE("approximate fixed point property")
{
    CHECK(has_afpp(digital_picture({{0, 1}, {0, 1}})).holds);
    CHECK(has_afpp(digital_picture({{0, 2}, {0, 1}})).holds);
    CHECK(has_afpp(digital_interval(0, 3)).holds);
    for (std::size_t n : {4u, 6u, 8u}) {
        const DigitalImage c = simple_closed_curve(n);
        const PropertyVerdict v = has_afpp(c);
        CHECK_FALSE(v.holds);
        REQUIRE(v.witness);
        CHECK(approximate_fixed_points(*v.witness).empty());
        const DigitalMap shift = cyclic_shift(c, 2);
        CHECK(is_continuous(shift));
        CHECK(approximate_fixed_points(shift).empty());
    }
}

TEST_CASE("fixed-point-free constructions")
{
    const DigitalImage x = digital_interval(0, 3);
    const DigitalMap g = fixed_point_free_map(x, 2, 3);
    CHECK(g.table() == MapTable{2, 2, 3, 2});
    CHECK(is_continuous(g));
    CHECK(fixed_points(g).empty());
    CHECK_THROWS_AS(fixed_point_free_map(x, 0, 2), Error);
    CHECK_THROWS_AS(fixed_point_free_map(singleton(), 0, 0), Error);
    CHECK_THROWS_AS(fixed_point_free_map(build_image({{0}, {3}}, AdjacencySpec::cu(1)), 0, 1), Error);
    CHECK_THROWS_AS(fixed_point_free_witness(singleton()), Error);

    const DigitalImage apart = build_image({{0}, {3}, {9}}, AdjacencySpec::cu(1));
    const DigitalMap w = fixed_point_free_witness(apart);
    CHECK(is_continuous(w));
    CHECK(fixed_points(w).empty());
}

TEST_CASE("antipodal map on the punctured square")
{
    for (unsigned u : {1u, 2u}) {
        const DigitalImage x = punctured_square(u);
        const DigitalMap a = antipodal_map(x);
        CHECK(is_continuous(a));
        CHECK(fixed_points(a).empty());
        CHECK(a.then(a) == DigitalMap::identity(x));
    }
    CHECK_THROWS_AS(antipodal_map(digital_interval(0, 2)), Error);
}

TEST_CASE("the example-4-2 map is not continuous")
{
    const DigitalMap f = example_4_2_map();
    CHECK(f.table() == MapTable{0, 0, 1});
    CHECK_FALSE(is_continuous(f));
}

}
