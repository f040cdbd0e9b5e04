#include "digifix/homotopy.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <deque>
#include <map>

using namespace digifix;

namespace {

// The map graph built by brute force: continuous maps as vertices, one-step
// homotopic pairs as edges.
struct MapGraph {
    std::vector<MapTable> maps;
    std::vector<std::vector<std::size_t>> edges;

    explicit MapGraph(const DigitalImage& x)
    {
        for (const MapTable& t : test::all_tables(x.size()))
            if (test::naive_continuous(x, t))
                maps.push_back(t);
        edges.resize(maps.size());
        for (std::size_t i = 0; i < maps.size(); ++i)
            for (std::size_t j = 0; j < maps.size(); ++j) {
                bool near = i != j;
                for (Index p = 0; p < x.size() && near; ++p)
                    near = x.adjacent_or_equal(maps[i][p], maps[j][p]);
                if (near)
                    edges[i].push_back(j);
            }
    }

    std::size_t index(const MapTable& t) const
    {
        return std::find(maps.begin(), maps.end(), t) - maps.begin();
    }

    std::vector<std::size_t> distances(std::size_t from) const
    {
        std::vector<std::size_t> d(maps.size(), SIZE_MAX);
        std::deque<std::size_t> q{from};
        d[from] = 0;
        while (!q.empty()) {
            const std::size_t v = q.front();
            q.pop_front();
            for (std::size_t w : edges[v])
                if (d[w] == SIZE_MAX) {
                    d[w] = d[v] + 1;
                    q.push_back(w);
                }
        }
        return d;
    }
};

std::vector<DigitalImage> small_images()
{
    return {singleton(),
            digital_interval(0, 1),
            digital_interval(0, 2),
            digital_picture({{0, 1}, {0, 1}}),
            simple_closed_curve(4),
            example_4_2_image(),
            build_image({{0}, {3}, {4}}, AdjacencySpec::cu(1))};
}

} // namespace

TEST_SUITE("homotopy") {

TEST_CASE("one-step relation and validation")
{
    const DigitalImage x = digital_interval(0, 2);
    const DigitalMap id = DigitalMap::identity(x);
    CHECK(is_one_step_homotopic(id, DigitalMap(x, {0, 0, 1})));
    CHECK_FALSE(is_one_step_homotopic(id, DigitalMap(x, {0, 0, 0})));
    CHECK_FALSE(is_one_step_homotopic(id, DigitalMap(x, {0, 2, 2})));

    HomotopyTrace ok{{id, DigitalMap(x, {0, 0, 1}), DigitalMap(x, {0, 0, 0})}};
    CHECK(validate_homotopy(ok));
    CHECK(ok.length() == 2);

    HomotopyTrace jump{{id, DigitalMap(x, {0, 0, 0})}};
    const HomotopyValidation vj = validate_homotopy(jump);
    CHECK_FALSE(vj);
    CHECK(vj.step == std::optional<std::size_t>(0));
    CHECK(vj.point == std::optional<Index>(2));

    HomotopyTrace broken{{id, DigitalMap(x, {0, 2, 1})}};
    const HomotopyValidation vb = validate_homotopy(broken);
    CHECK_FALSE(vb);
    CHECK(vb.step == std::optional<std::size_t>(1));
    CHECK_FALSE(vb.point);

    CHECK_FALSE(validate_homotopy(HomotopyTrace{}));
    CHECK_THROWS_AS(one_step_neighbors(DigitalMap(x, {0, 2, 1})), Error);
}

TEST_CASE("property: neighbors, classes and shortest traces match the brute-force map graph")
{
    for (const DigitalImage& x : small_images()) {
        const MapGraph graph(x);
        std::vector<bool> seen(graph.maps.size(), false);
        for (std::size_t i = 0; i < graph.maps.size(); ++i) {
            const DigitalMap f(x, graph.maps[i]);
            std::vector<MapTable> expected;
            for (std::size_t j : graph.edges[i])
                expected.push_back(graph.maps[j]);
            CHECK(one_step_neighbors(f) == expected);

            const auto d = graph.distances(i);
            std::vector<MapTable> cls;
            for (std::size_t j = 0; j < graph.maps.size(); ++j)
                if (d[j] != SIZE_MAX)
                    cls.push_back(graph.maps[j]);
            CHECK(homotopy_class(f) == cls);

            if (seen[i])
                continue;
            for (std::size_t j = 0; j < graph.maps.size(); ++j) {
                const auto trace = find_homotopy(f, DigitalMap(x, graph.maps[j]));
                CHECK(trace.has_value() == (d[j] != SIZE_MAX));
                if (trace) {
                    CHECK(validate_homotopy(*trace));
                    CHECK(trace->front() == f);
                    CHECK(trace->back().table() == graph.maps[j]);
                    CHECK(trace->length() == d[j]);
                    seen[j] = true;
                }
            }
        }
    }
}

TEST_CASE("property: MF and XF against the class by brute force")
{
    for (const DigitalImage& x : small_images()) {
        const MapGraph graph(x);
        for (std::size_t i = 0; i < graph.maps.size(); ++i) {
            const DigitalMap f(x, graph.maps[i]);
            const auto d = graph.distances(i);
            std::size_t lo = SIZE_MAX, hi = 0, size = 0;
            for (std::size_t j = 0; j < graph.maps.size(); ++j)
                if (d[j] != SIZE_MAX) {
                    ++size;
                    std::size_t count = 0;
                    for (Index p = 0; p < x.size(); ++p)
                        count += graph.maps[j][p] == p;
                    lo = std::min(lo, count);
                    hi = std::max(hi, count);
                }
            const FixedPointExtreme low = mf(f);
            const FixedPointExtreme high = xf(f);
            CHECK(low.value == lo);
            CHECK(high.value == hi);
            CHECK(fixed_points(low.witness).size() == lo);
            CHECK(fixed_points(high.witness).size() == hi);
            CHECK(find_homotopy(f, low.witness));
            CHECK(find_homotopy(f, high.witness));
            if (low.class_size)
                CHECK(*low.class_size == size);

            const HomotopyClassSummary s = summarize_class(f);
            CHECK(s.class_size == size);
            CHECK(s.mf == lo);
            CHECK(s.xf == hi);
            CHECK(s.mf <= fixed_points(f).size());
            CHECK(fixed_points(f).size() <= s.xf);
        }
    }
}

TEST_CASE("anchors on the interval, the picture and the singleton")
{
    const DigitalImage edge = digital_interval(0, 1);
    CHECK(mf(DigitalMap::constant(edge, 0)).value == 0);
    CHECK(xf(DigitalMap::identity(edge)).value == 2);
    const DigitalImage square = digital_picture({{0, 1}, {0, 1}});
    CHECK(mf(DigitalMap::constant(square, 0)).value == 0);
    CHECK(xf(DigitalMap::identity(square)).value == 4);
    CHECK(mf(DigitalMap::identity(singleton())).value == 1);
    CHECK(xf(DigitalMap::identity(singleton())).value == 1);

    const HomotopyTrace t = constant_to_fpf_homotopy(square, 0, 3);
    CHECK(validate_homotopy(t));
    CHECK(t.length() == 1);
    CHECK(fixed_points(t.back()).empty());
}

TEST_CASE("rigidity")
{
    CHECK(is_rigid(singleton()));
    CHECK_FALSE(is_rigid(digital_interval(0, 1)));
    CHECK_FALSE(is_rigid(simple_closed_curve(8)));
    const DigitalImage w = wedge_of_loops(5, 5);
    CHECK(is_rigid(w));
    const DigitalMap id = DigitalMap::identity(w);
    CHECK(homotopy_class(id).size() == 1);
    CHECK(mf(id).value == 9);
    CHECK(xf(id).value == 9);
}

TEST_CASE("cycle rotations form the identity class")
{
    const DigitalMap id = DigitalMap::identity(simple_closed_curve(8));
    const auto cls = homotopy_class(id);
    CHECK(cls.size() == 8);
    for (std::size_t k = 0; k < 8; ++k)
        CHECK(std::binary_search(cls.begin(), cls.end(), cyclic_shift(id.domain(), k).table()));
    CHECK(mf(id).value == 0);
}

TEST_CASE("budgets")
{
    const DigitalMap id = DigitalMap::identity(digital_picture({{0, 2}, {0, 1}}));
    CHECK_THROWS_AS(homotopy_class(id, 3), BudgetExceeded);
    try {
        homotopy_class(id, 3);
    } catch (const BudgetExceeded& e) {
        CHECK(e.budget() == 3);
    }
    CHECK(mf(fixed_point_free_witness(id.domain()), 1).value == 0);
}

TEST_CASE("homotopy fixed point property only on a singleton")
{
    CHECK(has_homotopy_fixed_point_property(singleton()));
    for (const DigitalImage& x : small_images()) {
        if (x.size() == 1)
            continue;
        const HomotopyFixedPointReport r = homotopy_fixed_point_report(x);
        CHECK_FALSE(r.holds);
        REQUIRE(r.witness);
        CHECK(validate_homotopy(*r.witness));
        CHECK(r.product_continuous);
        for (const DigitalMap& step : r.witness->steps)
            CHECK(fixed_points(step).empty());
    }
}

TEST_CASE("classes without fixed points")
{
    const FixedPointFreeClassSearch interval = search_fixed_point_free_class(digital_interval(0, 1));
    CHECK(interval.maps == 4);
    CHECK(interval.classes == 1);
    CHECK_FALSE(interval.witness);

    const FixedPointFreeClassSearch apart = search_fixed_point_free_class(build_image({{0}, {3}}, AdjacencySpec::cu(1)));
    CHECK(apart.maps == 4);
    CHECK(apart.classes == 4);
    REQUIRE(apart.witness);
    CHECK(apart.witness->table() == MapTable{1, 0});
}

}
