#include "digifix/image.hpp"

#include "metric_cache.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace digifix {

namespace adjacency {
bool operator==(const NormalProduct& a, const NormalProduct& b)
{
    return a.split == b.split && *a.left == *b.left && *a.right == *b.right;
}
} // namespace adjacency

AdjacencySpec AdjacencySpec::normal_product(AdjacencySpec left, AdjacencySpec right, std::size_t split)
{
    return {adjacency::NormalProduct{std::make_shared<const AdjacencySpec>(std::move(left)),
                                     std::make_shared<const AdjacencySpec>(std::move(right)), split}};
}

bool cu_adjacent(const Point& p, const Point& q, unsigned u)
{
    if (p.dim() != q.dim())
        throw Error("cu_adjacent: dimension mismatch");
    if (u < 1 || u > p.dim())
        throw Error("cu_adjacent: u must satisfy 1 <= u <= n");
    unsigned unit_differences = 0;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        const Coord diff = p[i] > q[i] ? p[i] - q[i] : q[i] - p[i];
        if (diff > 1)
            return false;
        if (diff == 1)
            ++unit_differences;
    }
    return unit_differences >= 1 && unit_differences <= u;
}

namespace {

using Matrix = std::vector<std::uint8_t>;

Matrix adjacency_matrix(const std::vector<Point>& points, const AdjacencySpec& spec);

Matrix product_matrix(const std::vector<Point>& points, const adjacency::NormalProduct& np)
{
    const std::size_t n = points.size();
    const std::size_t dim = points.front().dim();
    if (np.split == 0 || np.split >= dim)
        throw Error("normal product: left factor dimension must lie strictly between 0 and the ambient dimension");

    // factors are the sorted distinct projections
    auto project = [&](std::size_t from, std::size_t to) {
        std::vector<Index> which(n);
        std::map<Point, Index> position;
        std::vector<Point> factor;
        for (std::size_t i = 0; i < n; ++i) {
            Point proj(std::vector<Coord>(points[i].coords.begin() + from, points[i].coords.begin() + to));
            position.emplace(std::move(proj), 0);
        }
        for (auto& [pt, idx] : position) {
            idx = static_cast<Index>(factor.size());
            factor.push_back(pt);
        }
        for (std::size_t i = 0; i < n; ++i) {
            Point proj(std::vector<Coord>(points[i].coords.begin() + from, points[i].coords.begin() + to));
            which[i] = position.at(proj);
        }
        return std::pair(std::move(factor), std::move(which));
    };
    auto [left_points, left_of] = project(0, np.split);
    auto [right_points, right_of] = project(np.split, dim);
    const Matrix left = adjacency_matrix(left_points, *np.left);
    const Matrix right = adjacency_matrix(right_points, *np.right);
    const std::size_t nl = left_points.size();
    const std::size_t nr = right_points.size();

    Matrix m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const bool x_adj = left[left_of[i] * nl + left_of[j]] != 0;
            const bool y_adj = right[right_of[i] * nr + right_of[j]] != 0;
            const bool x_eq = left_of[i] == left_of[j];
            const bool y_eq = right_of[i] == right_of[j];
            m[i * n + j] = (x_adj && y_eq) || (x_eq && y_adj) || (x_adj && y_adj);
        }
    }
    return m;
}

Matrix adjacency_matrix(const std::vector<Point>& points, const AdjacencySpec& spec)
{
    const std::size_t n = points.size();
    Matrix m(n * n, 0);
    if (const auto* cu = std::get_if<adjacency::CU>(&spec.variant)) {
        if (cu->u < 1 || cu->u > points.front().dim())
            throw Error("c_u adjacency requires 1 <= u <= n");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                m[i * n + j] = m[j * n + i] = cu_adjacent(points[i], points[j], cu->u);
    } else if (const auto* custom = std::get_if<adjacency::Custom>(&spec.variant)) {
        for (auto [a, b] : custom->edges) {
            if (a >= n || b >= n)
                throw Error("custom adjacency: edge index out of range");
            if (a == b)
                throw Error("custom adjacency: self-loop");
            m[a * n + b] = m[b * n + a] = 1;
        }
    } else {
        m = product_matrix(points, std::get<adjacency::NormalProduct>(spec.variant));
    }
    return m;
}

} // namespace

DigitalImage build_image(std::vector<Point> points, AdjacencySpec adjacency)
{
    if (points.empty())
        throw Error("image must contain at least one point");
    const std::size_t dim = points.front().dim();
    if (dim == 0)
        throw Error("points must have positive dimension");
    std::set<Point> seen;
    for (const auto& p : points) {
        if (p.dim() != dim)
            throw Error("point dimension mismatch");
        if (!seen.insert(p).second)
            throw Error("duplicate point");
    }

    auto data = std::make_shared<DigitalImage::Data>();
    data->dim = dim;
    data->adjacency_matrix = adjacency_matrix(points, adjacency);
    const std::size_t n = points.size();
    data->neighbors.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (data->adjacency_matrix[i * n + j])
                data->neighbors[i].push_back(static_cast<Index>(j));
    data->points = std::move(points);
    data->adjacency = std::move(adjacency);
    data->cache = std::make_shared<detail::MetricCache>();

    DigitalImage image;
    image.data_ = std::move(data);
    return image;
}

bool DigitalImage::adjacent(Index i, Index j) const
{
    const std::size_t n = size();
    if (i >= n || j >= n)
        throw Error("index out of range");
    return data_->adjacency_matrix[i * n + j] != 0;
}

std::size_t DigitalImage::edge_count() const
{
    std::size_t twice = 0;
    for (const auto& nbrs : data_->neighbors)
        twice += nbrs.size();
    return twice / 2;
}

Index DigitalImage::find(const Point& p) const
{
    const auto it = std::find(data_->points.begin(), data_->points.end(), p);
    return static_cast<Index>(it - data_->points.begin());
}

bool operator==(const DigitalImage& a, const DigitalImage& b)
{
    if (a.data_ == b.data_)
        return true;
    if (!a.data_ || !b.data_)
        return false;
    return a.data_->points == b.data_->points && a.data_->adjacency_matrix == b.data_->adjacency_matrix;
}

std::vector<std::vector<Index>> connected_components(const DigitalImage& image)
{
    const std::size_t n = image.size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Index>> components;
    for (Index start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        std::vector<Index> component;
        std::queue<Index> frontier;
        frontier.push(start);
        seen[start] = true;
        while (!frontier.empty()) {
            const Index v = frontier.front();
            frontier.pop();
            component.push_back(v);
            for (Index w : image.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    frontier.push(w);
                }
            }
        }
        components.push_back(std::move(component));
    }
    return components;
}

std::vector<Index> bfs_order(const DigitalImage& image)
{
    std::vector<Index> order;
    order.reserve(image.size());
    for (auto& component : connected_components(image))
        order.insert(order.end(), component.begin(), component.end());
    return order;
}

bool is_connected(const DigitalImage& image)
{
    return connected_components(image).size() == 1;
}

DigitalImage normal_product(const DigitalImage& a, const DigitalImage& b)
{
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    std::vector<Point> points;
    points.reserve(na * nb);
    for (const auto& x : a.points()) {
        for (const auto& y : b.points()) {
            std::vector<Coord> c = x.coords;
            c.insert(c.end(), y.coords.begin(), y.coords.end());
            points.emplace_back(std::move(c));
        }
    }
    std::vector<std::pair<Index, Index>> edges;
    for (Index i = 0; i < na * nb; ++i) {
        for (Index j = i + 1; j < na * nb; ++j) {
            const Index xi = i / nb, yi = i % nb, xj = j / nb, yj = j % nb;
            const bool x_adj = a.adjacent(xi, xj), y_adj = b.adjacent(yi, yj);
            if ((x_adj && yi == yj) || (xi == xj && y_adj) || (x_adj && y_adj))
                edges.emplace_back(i, j);
        }
    }
    return build_image(std::move(points), AdjacencySpec::custom(std::move(edges)));
}

DigitalImage singleton(std::size_t dim)
{
    return build_image({Point(std::vector<Coord>(dim, 0))}, AdjacencySpec::cu(1));
}

DigitalImage digital_interval(Coord a, Coord b)
{
    if (a >= b)
        throw Error("digital interval requires a < b");
    std::vector<Point> points;
    for (Coord z = a; z <= b; ++z)
        points.push_back(Point{z});
    return build_image(std::move(points), AdjacencySpec::cu(1));
}

DigitalImage digital_picture(std::span<const std::pair<Coord, Coord>> bounds)
{
    if (bounds.empty())
        throw Error("digital picture requires at least one coordinate range");
    for (auto [lo, hi] : bounds)
        if (lo > hi)
            throw Error("digital picture requires a_i <= b_i");
    std::vector<Point> points;
    std::vector<Coord> current;
    for (auto [lo, hi] : bounds)
        current.push_back(lo);
    // odometer in lexicographic order
    while (true) {
        points.emplace_back(current);
        std::size_t k = bounds.size();
        while (k > 0) {
            --k;
            if (current[k] < bounds[k].second) {
                ++current[k];
                break;
            }
            current[k] = bounds[k].first;
            if (k == 0)
                return build_image(std::move(points), AdjacencySpec::cu(static_cast<unsigned>(bounds.size())));
        }
    }
}

DigitalImage digital_picture(std::initializer_list<std::pair<Coord, Coord>> bounds)
{
    return digital_picture(std::span<const std::pair<Coord, Coord>>(bounds.begin(), bounds.size()));
}

DigitalImage simple_closed_curve(std::size_t n)
{
    if (n < 4)
        throw Error("simple closed curve requires n >= 4");
    if (n == 5)
        throw Error("no 5-point simple closed curve exists in Z^2 under c_2");

    // Capsule: right column x = 2 going up, apex (1, h+1), left column x = 0
    // going down, base (1, 0). Odd n trades the lowest right-column point for
    // a diagonal notch (3, 1), (2, 0).
    const bool odd = n % 2 == 1;
    const auto h = static_cast<Coord>(odd ? (n - 3) / 2 : (n - 2) / 2);
    std::vector<Point> ccw;
    if (odd) {
        ccw.push_back(Point{2, 0});
        ccw.push_back(Point{3, 1});
        for (Coord y = 2; y <= h; ++y)
            ccw.push_back(Point{2, y});
    } else {
        for (Coord y = 1; y <= h; ++y)
            ccw.push_back(Point{2, y});
    }
    ccw.push_back(Point{1, h + 1});
    for (Coord y = h; y >= 1; --y)
        ccw.push_back(Point{0, y});
    ccw.push_back(Point{1, 0});

    const Coord dy = (h + 1) / 2;
    for (auto& p : ccw) {
        p.coords[0] -= 1;
        p.coords[1] -= dy;
    }

    DigitalImage image = build_image(std::move(ccw), AdjacencySpec::cu(2));
    for (Index i = 0; i < n; ++i) {
        const auto nbrs = image.neighbors(i);
        const Index prev = static_cast<Index>((i + n - 1) % n);
        const Index next = static_cast<Index>((i + 1) % n);
        if (nbrs.size() != 2 || !image.adjacent(i, prev) || !image.adjacent(i, next))
            throw Error("simple closed curve embedding failed verification");
    }
    return image;
}

DigitalImage wedge_of_loops(std::size_t m, std::size_t n)
{
    if (m < 4 || n < 4)
        throw Error("wedge of loops requires both loops to have at least 4 points");
    // loop 1: (i, 0) for i in [0, m); loop 2: (0, j) for j in [1, n) plus the
    // shared origin.
    std::vector<Point> raw;
    for (Coord i = 0; i < static_cast<Coord>(m); ++i)
        raw.push_back(Point{i, 0});
    for (Coord j = 1; j < static_cast<Coord>(n); ++j)
        raw.push_back(Point{0, j});
    auto loop2_index = [m](std::size_t k) { return k == 0 ? std::size_t{0} : m + k - 1; };
    std::vector<std::pair<std::size_t, std::size_t>> raw_edges;
    for (std::size_t k = 0; k < m; ++k)
        raw_edges.emplace_back(k, (k + 1) % m);
    for (std::size_t k = 0; k < n; ++k)
        raw_edges.emplace_back(loop2_index(k), loop2_index((k + 1) % n));

    std::vector<Index> order(raw.size());
    for (Index i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](Index a, Index b) { return raw[a] < raw[b]; });
    std::vector<Index> rank(raw.size());
    std::vector<Point> points;
    for (Index r = 0; r < order.size(); ++r) {
        rank[order[r]] = r;
        points.push_back(raw[order[r]]);
    }
    std::vector<std::pair<Index, Index>> edges;
    for (auto [a, b] : raw_edges) {
        Index ra = rank[a], rb = rank[b];
        edges.emplace_back(std::min(ra, rb), std::max(ra, rb));
    }
    std::sort(edges.begin(), edges.end());
    return build_image(std::move(points), AdjacencySpec::custom(std::move(edges)));
}

DigitalImage example_4_2_image()
{
    return build_image({Point{0, 0, 0, 0, 0}, Point{2, 0, 0, 0, 0}, Point{1, 1, 1, 1, 1}}, AdjacencySpec::cu(5));
}

DigitalImage punctured_square(unsigned u)
{
    if (u != 1 && u != 2)
        throw Error("punctured square supports c_1 and c_2");
    std::vector<Point> points;
    for (Coord x = -1; x <= 1; ++x)
        for (Coord y = -1; y <= 1; ++y)
            if (x != 0 || y != 0)
                points.push_back(Point{x, y});
    return build_image(std::move(points), AdjacencySpec::cu(u));
}

} // namespace digifix
