#include "digifix/map.hpp"

#include <algorithm>
#include <numeric>

namespace digifix {

DigitalMap::DigitalMap(DigitalImage domain, DigitalImage codomain, MapTable table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table))
{
    if (table_.size() != domain_.size())
        throw Error("map table length must equal the domain size");
    for (Index v : table_)
        if (v >= codomain_.size())
            throw Error("map table entry out of codomain range");
}

DigitalMap::DigitalMap(DigitalImage image, MapTable table) : DigitalMap(image, image, std::move(table)) {}

DigitalMap DigitalMap::identity(const DigitalImage& image)
{
    MapTable table(image.size());
    std::iota(table.begin(), table.end(), Index{0});
    return {image, std::move(table)};
}

DigitalMap DigitalMap::constant(const DigitalImage& image, Index value)
{
    return {image, MapTable(image.size(), value)};
}

DigitalMap DigitalMap::then(const DigitalMap& g) const
{
    if (!(codomain_ == g.domain_))
        throw Error("composition: codomain of the first map must be the domain of the second");
    MapTable table(table_.size());
    for (std::size_t i = 0; i < table_.size(); ++i)
        table[i] = g.table_[table_[i]];
    return {domain_, g.codomain_, std::move(table)};
}

bool is_continuous(const DigitalImage& domain, const DigitalImage& codomain, std::span<const Index> table)
{
    for (Index x = 0; x < domain.size(); ++x)
        for (Index y : domain.neighbors(x))
            if (y > x && !codomain.adjacent_or_equal(table[x], table[y]))
                return false;
    return true;
}

bool is_continuous(const DigitalMap& f)
{
    return is_continuous(f.domain(), f.codomain(), f.table());
}

namespace {

void require_self_map(const DigitalMap& f)
{
    if (!f.is_self_map())
        throw Error("operation requires a self-map (domain = codomain)");
}

} // namespace

std::size_t fixed_point_count(const DigitalImage& image, std::span<const Index> table)
{
    std::size_t count = 0;
    for (Index x = 0; x < image.size(); ++x)
        count += table[x] == x;
    return count;
}

bool has_approximate_fixed_point(const DigitalImage& image, std::span<const Index> table)
{
    for (Index x = 0; x < image.size(); ++x)
        if (image.adjacent_or_equal(table[x], x))
            return true;
    return false;
}

std::vector<Index> fixed_points(const DigitalMap& f)
{
    require_self_map(f);
    std::vector<Index> result;
    for (Index x = 0; x < f.size(); ++x)
        if (f(x) == x)
            result.push_back(x);
    return result;
}

std::vector<Index> approximate_fixed_points(const DigitalMap& f)
{
    require_self_map(f);
    std::vector<Index> result;
    for (Index x = 0; x < f.size(); ++x)
        if (f.domain().adjacent_or_equal(f(x), x))
            result.push_back(x);
    return result;
}

bool is_constant(const DigitalMap& f)
{
    return std::adjacent_find(f.table().begin(), f.table().end(), std::not_equal_to<>()) == f.table().end();
}

bool is_onto(const DigitalMap& f)
{
    require_self_map(f);
    std::vector<bool> hit(f.codomain().size(), false);
    for (Index v : f.table())
        hit[v] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

namespace {

class ContinuousSearch {
public:
    ContinuousSearch(const DigitalImage& image, const std::vector<std::vector<Index>>* candidates,
                     const TableVisitor& visit)
        : image_(image), visit_(visit), order_(bfs_order(image)), table_(image.size(), 0),
          allowed_(image.size() * image.size(), candidates == nullptr)
    {
        const std::size_t n = image.size();
        if (candidates) {
            if (candidates->size() != n)
                throw Error("candidate lists must cover every point");
            for (Index x = 0; x < n; ++x)
                for (Index c : (*candidates)[x]) {
                    if (c >= n)
                        throw Error("candidate index out of range");
                    allowed_[x * n + c] = true;
                }
        }
        // closed neighborhoods, sorted
        closed_.resize(n);
        for (Index v = 0; v < n; ++v) {
            closed_[v].assign(image.neighbors(v).begin(), image.neighbors(v).end());
            closed_[v].push_back(v);
            std::sort(closed_[v].begin(), closed_[v].end());
        }
        // neighbors assigned before each position
        earlier_.resize(n);
        std::vector<std::size_t> position(n);
        for (std::size_t k = 0; k < n; ++k)
            position[order_[k]] = k;
        for (std::size_t k = 0; k < n; ++k)
            for (Index y : image.neighbors(order_[k]))
                if (position[y] < k)
                    earlier_[k].push_back(y);
        all_.resize(n);
        std::iota(all_.begin(), all_.end(), Index{0});
    }

    bool run() { return assign(0); }

private:
    bool assign(std::size_t k)
    {
        if (k == order_.size())
            return visit_(table_);
        const Index x = order_[k];
        const std::size_t n = image_.size();
        const auto& pool = earlier_[k].empty() ? all_ : closed_[table_[earlier_[k].front()]];
        for (Index c : pool) {
            if (!allowed_[x * n + c])
                continue;
            bool ok = true;
            for (Index y : earlier_[k])
                if (!image_.adjacent_or_equal(table_[y], c)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            table_[x] = c;
            if (!assign(k + 1))
                return false;
        }
        return true;
    }

    const DigitalImage& image_;
    const TableVisitor& visit_;
    std::vector<Index> order_;
    MapTable table_;
    std::vector<bool> allowed_;
    std::vector<std::vector<Index>> closed_;
    std::vector<std::vector<Index>> earlier_;
    std::vector<Index> all_;
};

} // namespace

bool for_each_continuous_selfmap(const DigitalImage& image, const TableVisitor& visit)
{
    return ContinuousSearch(image, nullptr, visit).run();
}

bool for_each_continuous_selfmap(const DigitalImage& image, const std::vector<std::vector<Index>>& candidates,
                                 const TableVisitor& visit)
{
    return ContinuousSearch(image, &candidates, visit).run();
}

std::vector<DigitalMap> enumerate_continuous_selfmaps(const DigitalImage& image, std::size_t limit)
{
    std::vector<MapTable> tables;
    for_each_continuous_selfmap(image, [&](std::span<const Index> t) {
        tables.emplace_back(t.begin(), t.end());
        return limit == 0 || tables.size() < limit;
    });
    std::sort(tables.begin(), tables.end());
    std::vector<DigitalMap> maps;
    maps.reserve(tables.size());
    for (auto& t : tables)
        maps.emplace_back(image, std::move(t));
    return maps;
}

bool for_each_selfmap(const DigitalImage& image, const TableVisitor& visit)
{
    const std::size_t n = image.size();
    // n^n must fit in 64 bits
    if (n > 15)
        throw Error("for_each_selfmap: image too large for exhaustive enumeration");
    MapTable table(n, 0);
    while (true) {
        if (!visit(table))
            return false;
        std::size_t k = n;
        while (true) {
            if (k == 0)
                return true;
            --k;
            if (table[k] + 1 < n) {
                ++table[k];
                break;
            }
            table[k] = 0;
        }
    }
}

bool for_each_permutation(const DigitalImage& image, const TableVisitor& visit)
{
    MapTable table(image.size());
    std::iota(table.begin(), table.end(), Index{0});
    do {
        if (!visit(table))
            return false;
    } while (std::next_permutation(table.begin(), table.end()));
    return true;
}

namespace {

// Searches the continuous self-maps with f(x) outside `excluded(x)`; any hit
// is a counterexample to the property.
template <typename Excluded>
PropertyVerdict search_counterexample(const DigitalImage& image, Excluded excluded)
{
    const std::size_t n = image.size();
    std::vector<std::vector<Index>> candidates(n);
    for (Index x = 0; x < n; ++x)
        for (Index c = 0; c < n; ++c)
            if (!excluded(x, c))
                candidates[x].push_back(c);
    PropertyVerdict verdict;
    for_each_continuous_selfmap(image, candidates, [&](std::span<const Index> t) {
        ++verdict.maps_examined;
        verdict.holds = false;
        verdict.witness = DigitalMap(image, MapTable(t.begin(), t.end()));
        return false;
    });
    return verdict;
}

} // namespace

PropertyVerdict has_fpp(const DigitalImage& image)
{
    return search_counterexample(image, [](Index x, Index c) { return x == c; });
}

PropertyVerdict has_afpp(const DigitalImage& image)
{
    return search_counterexample(image, [&image](Index x, Index c) { return image.adjacent_or_equal(x, c); });
}

DigitalMap fixed_point_free_map(const DigitalImage& image, Index x0, Index x1)
{
    if (image.size() < 2)
        throw Error("fixed_point_free_map requires more than one point");
    if (!is_connected(image))
        throw Error("fixed_point_free_map requires a connected image");
    if (x0 >= image.size() || x1 >= image.size() || !image.adjacent(x0, x1))
        throw Error("fixed_point_free_map requires x0 adjacent to x1");
    MapTable table(image.size(), x0);
    table[x0] = x1;
    DigitalMap g(image, std::move(table));
    if (!is_continuous(g) || !fixed_points(g).empty())
        throw std::logic_error("fixed_point_free_map: construction failed its postcondition");
    return g;
}

DigitalMap fixed_point_free_witness(const DigitalImage& image)
{
    const std::size_t n = image.size();
    if (n < 2)
        throw Error("a singleton has no fixed-point-free self-map");
    if (is_connected(image))
        return fixed_point_free_map(image, 0, image.neighbors(0).front());

    // Send every other component to x0; inside the component of x0 use the
    // two-point construction when it has an edge, otherwise send x0 to a
    // point of another component.
    const auto components = connected_components(image);
    const auto host = std::find_if(components.begin(), components.end(), [](const auto& c) { return c.size() > 1; });
    MapTable table(n);
    if (host != components.end()) {
        const Index x0 = host->front();
        const Index x1 = image.neighbors(x0).front();
        std::fill(table.begin(), table.end(), x0);
        table[x0] = x1;
    } else {
        const Index x0 = components[0].front();
        std::fill(table.begin(), table.end(), x0);
        table[x0] = components[1].front();
    }
    DigitalMap g(image, std::move(table));
    if (!is_continuous(g) || !fixed_points(g).empty())
        throw std::logic_error("fixed_point_free_witness: construction failed its postcondition");
    return g;
}

DigitalMap cyclic_shift(const DigitalImage& image, std::size_t k)
{
    const std::size_t n = image.size();
    MapTable table(n);
    for (std::size_t i = 0; i < n; ++i)
        table[i] = static_cast<Index>((i + k) % n);
    return {image, std::move(table)};
}

DigitalMap antipodal_map(const DigitalImage& image)
{
    MapTable table(image.size());
    for (Index i = 0; i < image.size(); ++i) {
        std::vector<Coord> c = image.point(i).coords;
        for (auto& v : c)
            v = -v;
        const Index j = image.find(Point(std::move(c)));
        if (j == image.size())
            throw Error("antipodal_map: point set is not symmetric about the origin");
        table[i] = j;
    }
    return {image, std::move(table)};
}

DigitalMap example_4_2_map()
{
    return {example_4_2_image(), MapTable{0, 0, 1}};
}

} // namespace digifix
