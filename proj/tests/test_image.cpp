#include "digifix/image.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace digifix;

namespace {

// Count coordinates at distance exactly one; reject any larger gap.
bool oracle_cu(const Point& p, const Point& q, unsigned u)
{
    unsigned ones = 0;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        const auto d = std::llabs(p[i] - q[i]);
        if (d > 1)
            return false;
        ones += d == 1;
    }
    return ones >= 1 && ones <= u;
}

std::size_t binomial(std::size_t n, std::size_t k)
{
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Components by union-find over the neighbor lists.
std::size_t oracle_component_count(const DigitalImage& x)
{
    std::vector<Index> parent(x.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](Index a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    };
    for (Index a = 0; a < x.size(); ++a)
        for (Index b : x.neighbors(a))
            parent[root(a)] = root(b);
    std::size_t count = 0;
    for (Index a = 0; a < x.size(); ++a)
        count += root(a) == a;
    return count;
}

} // namespace

TEST_SUITE("image") {

TEST_CASE("c_u adjacency on examples")
{
    CHECK(cu_adjacent({0, 0}, {1, 0}, 1));
    CHECK_FALSE(cu_adjacent({0, 0}, {1, 1}, 1));
    CHECK(cu_adjacent({0, 0}, {1, 1}, 2));
    CHECK_FALSE(cu_adjacent({0, 0}, {0, 0}, 2));
    CHECK_FALSE(cu_adjacent({0, 0}, {2, 0}, 2));
    CHECK(cu_adjacent({0, 0, 0}, {1, 1, 1}, 3));
    CHECK_FALSE(cu_adjacent({0, 0, 0}, {1, 1, 1}, 2));
    CHECK_THROWS_AS(cu_adjacent({0, 0}, {1, 0}, 3), Error);
    CHECK_THROWS_AS(cu_adjacent({0, 0}, {1}, 1), Error);
}

TEST_CASE("neighbor counts of an interior point equal sum_k C(n,k) 2^k for k <= u")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<std::pair<Coord, Coord>> bounds(n, {-1, 1});
        for (unsigned u = 1; u <= n; ++u) {
            const DigitalImage cube = build_image(digital_picture(bounds).points(), AdjacencySpec::cu(u));
            std::vector<Coord> origin(n, 0);
            const Index centre = cube.find(Point(origin));
            std::size_t expected = 0;
            for (std::size_t k = 1; k <= u; ++k)
                expected += binomial(n, k) << k;
            CAPTURE(n);
            CAPTURE(u);
            CHECK(cube.neighbors(centre).size() == expected);
        }
    }
    // the familiar values: 4 and 8 in Z^2, 6, 18 and 26 in Z^3
    const DigitalImage z3 = digital_picture({{-1, 1}, {-1, 1}, {-1, 1}});
    CHECK(z3.neighbors(z3.find({0, 0, 0})).size() == 26);
    CHECK(build_image(z3.points(), AdjacencySpec::cu(1)).neighbors(13).size() == 6);
    CHECK(build_image(z3.points(), AdjacencySpec::cu(2)).neighbors(13).size() == 18);
}

TEST_CASE("property: neighbor table matches the definition, symmetric and irreflexive")
{
    auto g = test::rng(10);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t dim = test::uniform(g, 1, 4);
        const unsigned u = static_cast<unsigned>(test::uniform(g, 1, static_cast<std::int64_t>(dim)));
        const std::size_t size = test::uniform(g, 1, 12);
        const DigitalImage x = test::random_image(g, dim, size, 3, u);
        std::size_t edges = 0;
        for (Index i = 0; i < x.size(); ++i) {
            CHECK(std::is_sorted(x.neighbors(i).begin(), x.neighbors(i).end()));
            CHECK_FALSE(x.adjacent(i, i));
            for (Index j = 0; j < x.size(); ++j) {
                CHECK(x.adjacent(i, j) == oracle_cu(x.point(i), x.point(j), u));
                CHECK(x.adjacent(i, j) == x.adjacent(j, i));
                edges += i < j && x.adjacent(i, j);
            }
        }
        CHECK(x.edge_count() == edges);
        CHECK(connected_components(x).size() == oracle_component_count(x));
        CHECK(is_connected(x) == (oracle_component_count(x) == 1));
    }
}

TEST_CASE("construction errors")
{
    CHECK_THROWS_AS(build_image({}, AdjacencySpec::cu(1)), Error);
    CHECK_THROWS_AS(build_image({{0, 0}, {0, 0}}, AdjacencySpec::cu(1)), Error);
    CHECK_THROWS_AS(build_image({{0, 0}, {1}}, AdjacencySpec::cu(1)), Error);
    CHECK_THROWS_AS(build_image({{0, 0}}, AdjacencySpec::cu(3)), Error);
    CHECK_THROWS_AS(build_image({{0, 0}}, AdjacencySpec::cu(0)), Error);
    CHECK_THROWS_AS(build_image({{0}, {5}}, AdjacencySpec::custom({{0, 0}})), Error);
    CHECK_THROWS_AS(build_image({{0}, {5}}, AdjacencySpec::custom({{0, 2}})), Error);
    CHECK_THROWS_AS(digital_interval(1, 1), Error);
    CHECK_THROWS_AS(simple_closed_curve(3), Error);
    CHECK_THROWS_AS(simple_closed_curve(5), Error);
    CHECK_THROWS_AS(wedge_of_loops(3, 5), Error);
    CHECK_THROWS_AS(punctured_square(3), Error);
}

TEST_CASE("custom adjacency is symmetric whichever way edges are listed")
{
    const DigitalImage x = build_image({{0}, {5}, {9}}, AdjacencySpec::custom({{1, 0}, {1, 2}}));
    CHECK(x.adjacent(0, 1));
    CHECK(x.adjacent(1, 0));
    CHECK(x.adjacent(2, 1));
    CHECK_FALSE(x.adjacent(0, 2));
    CHECK(x.edge_count() == 2);
}

TEST_CASE("simple closed curves are cycles")
{
    for (std::size_t n : {4u, 6u, 7u, 8u, 10u, 13u}) {
        const DigitalImage c = simple_closed_curve(n);
        REQUIRE(c.size() == n);
        CHECK(c.dim() == 2);
        for (Index i = 0; i < n; ++i) {
            CHECK(c.neighbors(i).size() == 2);
            CHECK(c.adjacent(i, static_cast<Index>((i + 1) % n)));
        }
        CHECK(is_connected(c));
    }
}

TEST_CASE("wedge of loops")
{
    const DigitalImage w = wedge_of_loops(5, 5);
    CHECK(w.size() == 9);
    CHECK(w.neighbors(0).size() == 4);
    for (Index i = 1; i < w.size(); ++i)
        CHECK(w.neighbors(i).size() == 2);
    CHECK(w.edge_count() == 10);
    CHECK(is_connected(w));
}

TEST_CASE("property: normal product adjacency")
{
    auto g = test::rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const DigitalImage a = test::random_image(g, 1, test::uniform(g, 1, 4), 5, 1);
        const DigitalImage b = test::random_image(g, 2, test::uniform(g, 1, 4), 3, 2);
        const DigitalImage p = normal_product(a, b);
        REQUIRE(p.size() == a.size() * b.size());
        CHECK(p.dim() == 3);
        for (Index i = 0; i < p.size(); ++i)
            for (Index j = 0; j < p.size(); ++j) {
                const Index ai = i / b.size(), bi = i % b.size(), aj = j / b.size(), bj = j % b.size();
                const bool expected = i != j && a.adjacent_or_equal(ai, aj) && b.adjacent_or_equal(bi, bj);
                CHECK(p.adjacent(i, j) == expected);
            }
    }
    // [0,1]_Z x [0,1]_Z under the normal product is the 2x2 picture with c_2
    const DigitalImage square = normal_product(digital_interval(0, 1), digital_interval(0, 1));
    const DigitalImage picture = digital_picture({{0, 1}, {0, 1}});
    for (Index i = 0; i < 4; ++i)
        for (Index j = 0; j < 4; ++j)
            CHECK(square.adjacent(i, j) == picture.adjacent(i, j));
}

TEST_CASE("fixtures")
{
    const DigitalImage e = example_4_2_image();
    CHECK(e.size() == 3);
    CHECK(e.dim() == 5);
    CHECK(e.edge_count() == 2);
    CHECK(e.adjacent(0, 2));
    CHECK(e.adjacent(1, 2));
    CHECK_FALSE(e.adjacent(0, 1));

    CHECK(punctured_square(1).size() == 8);
    CHECK(punctured_square(1).edge_count() == 8);
    CHECK(punctured_square(2).edge_count() == 12);
    CHECK(punctured_square(1).find({0, 0}) == 8);

    CHECK(singleton().size() == 1);
    CHECK(singleton(3).dim() == 3);
    CHECK(digital_picture({{0, 2}, {0, 1}}).size() == 6);
    CHECK(bfs_order(digital_interval(0, 3)) == std::vector<Index>{0, 1, 2, 3});
}

}
