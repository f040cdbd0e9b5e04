#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace digifix {

/// Raised for violated preconditions and malformed inputs.
class Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Index = std::uint32_t;
using Coord = std::int64_t;

struct Point {
    std::vector<Coord> coords;

    Point() = default;
    Point(std::initializer_list<Coord> c) : coords(c) {}
    explicit Point(std::vector<Coord> c) : coords(std::move(c)) {}

    std::size_t dim() const { return coords.size(); }
    Coord operator[](std::size_t i) const { return coords[i]; }

    friend auto operator<=>(const Point&, const Point&) = default;
};

struct AdjacencySpec;

namespace adjacency {
struct CU {
    unsigned u = 1;
    friend bool operator==(const CU&, const CU&) = default;
};
struct NormalProduct {
    std::shared_ptr<const AdjacencySpec> left;
    std::shared_ptr<const AdjacencySpec> right;
    /// dimension of the left factor; coordinates [0, split) belong to it
    std::size_t split = 0;
    friend bool operator==(const NormalProduct& a, const NormalProduct& b);
};
struct Custom {
    std::vector<std::pair<Index, Index>> edges;
    friend bool operator==(const Custom&, const Custom&) = default;
};
} // namespace adjacency

struct AdjacencySpec {
    std::variant<adjacency::CU, adjacency::NormalProduct, adjacency::Custom> variant;

    static AdjacencySpec cu(unsigned u) { return {adjacency::CU{u}}; }
    static AdjacencySpec custom(std::vector<std::pair<Index, Index>> edges) { return {adjacency::Custom{std::move(edges)}}; }
    static AdjacencySpec normal_product(AdjacencySpec left, AdjacencySpec right, std::size_t split);

    friend bool operator==(const AdjacencySpec&, const AdjacencySpec&) = default;
};

/// True iff p != q, every coordinate differs by at most 1, and between 1 and
/// u coordinates differ by exactly 1.
bool cu_adjacent(const Point& p, const Point& q, unsigned u);

namespace detail {
struct MetricCache;
}

/// A finite point set in Z^n with an adjacency relation; immutable, and cheap
/// to copy (copies share the same underlying data and distance caches).
class DigitalImage {
public:
    DigitalImage() = default;

    std::size_t dim() const { return data_->dim; }
    std::size_t size() const { return data_->points.size(); }
    const std::vector<Point>& points() const { return data_->points; }
    const Point& point(Index i) const { return data_->points.at(i); }
    const AdjacencySpec& adjacency() const { return data_->adjacency; }

    /// Sorted neighbor indices of i.
    std::span<const Index> neighbors(Index i) const { return data_->neighbors.at(i); }
    bool adjacent(Index i, Index j) const;
    /// Equal or adjacent.
    bool adjacent_or_equal(Index i, Index j) const { return i == j || adjacent(i, j); }
    std::size_t edge_count() const;

    /// Index of a point, or size() if absent.
    Index find(const Point& p) const;

    detail::MetricCache& metric_cache() const { return *data_->cache; }

    friend bool operator==(const DigitalImage& a, const DigitalImage& b);

private:
    friend DigitalImage build_image(std::vector<Point> points, AdjacencySpec adjacency);

    struct Data {
        std::size_t dim = 0;
        std::vector<Point> points;
        AdjacencySpec adjacency;
        std::vector<std::vector<Index>> neighbors;
        std::vector<std::uint8_t> adjacency_matrix;
        std::shared_ptr<detail::MetricCache> cache;
    };
    std::shared_ptr<const Data> data_;
};

/// Validates the points and materializes the neighbor table.
DigitalImage build_image(std::vector<Point> points, AdjacencySpec adjacency);

bool is_connected(const DigitalImage& image);
/// Connected components as sorted index lists, ordered by smallest member.
std::vector<std::vector<Index>> connected_components(const DigitalImage& image);
/// Indices in breadth-first order, component by component, each component
/// started from its smallest index.
std::vector<Index> bfs_order(const DigitalImage& image);

/// Cartesian product with the normal product adjacency. Point (i, j) of the
/// result has index i * b.size() + j.
DigitalImage normal_product(const DigitalImage& a, const DigitalImage& b);

// Generators.

DigitalImage singleton(std::size_t dim = 1);
/// [a, b]_Z with 2-adjacency (c_1 in Z^1).
DigitalImage digital_interval(Coord a, Coord b);
/// prod [a_i, b_i]_Z with c_n adjacency; lexicographic point order.
DigitalImage digital_picture(std::span<const std::pair<Coord, Coord>> bounds);
DigitalImage digital_picture(std::initializer_list<std::pair<Coord, Coord>> bounds);
/// n points of Z^2 under c_2, index i adjacent exactly to i +- 1 mod n.
/// No such curve has 5 points; n = 5 is rejected like n < 4.
DigitalImage simple_closed_curve(std::size_t n);
/// Two cycles of lengths m and n sharing index 0 (the wedge point), with
/// Custom adjacency.
DigitalImage wedge_of_loops(std::size_t m, std::size_t n);

// Named fixtures.

/// The `example-4-2` fixture: {(0,0,0,0,0), (2,0,0,0,0), (1,1,1,1,1)} with c_5.
DigitalImage example_4_2_image();
/// [-1,1]_Z^2 minus the origin, with c_u for u in {1, 2}.
DigitalImage punctured_square(unsigned u);

} // namespace digifix
