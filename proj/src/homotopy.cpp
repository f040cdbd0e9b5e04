#include "digifix/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <unordered_map>

namespace digifix {

namespace {

void require_same_spaces(const DigitalMap& f, const DigitalMap& g)
{
    if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()))
        throw Error("maps must share domain and codomain");
}

void require_continuous_selfmap(const DigitalMap& f)
{
    if (!f.is_self_map())
        throw Error("homotopy search works on self-maps");
    if (!is_continuous(f))
        throw Error("homotopy search requires a continuous map");
}

bool tracks_adjacent(const DigitalMap& f, const DigitalMap& g, Index* bad = nullptr)
{
    for (Index x = 0; x < f.size(); ++x) {
        if (!f.codomain().adjacent_or_equal(f(x), g(x))) {
            if (bad)
                *bad = x;
            return false;
        }
    }
    return true;
}

// One byte per entry; short tables stay in the small-string buffer.
using Key = std::string;

Key key_of(std::span<const Index> t)
{
    Key k(t.size(), '\0');
    for (std::size_t i = 0; i < t.size(); ++i)
        k[i] = static_cast<char>(t[i]);
    return k;
}

MapTable table_of(const Key& k)
{
    MapTable t(k.size());
    for (std::size_t i = 0; i < k.size(); ++i)
        t[i] = static_cast<unsigned char>(k[i]);
    return t;
}

// One-step neighbors of a continuous self-map: g(x) ranges over the closed
// neighborhood of f(x), points are assigned in index order and every
// assigned edge is checked, so the neighbors come out in lexicographic order.
class NeighborGenerator {
public:
    explicit NeighborGenerator(const DigitalImage& image) : image_(image), closed_(image.size()), earlier_(image.size())
    {
        for (Index v = 0; v < image.size(); ++v) {
            closed_[v].assign(image.neighbors(v).begin(), image.neighbors(v).end());
            closed_[v].push_back(v);
            std::sort(closed_[v].begin(), closed_[v].end());
            for (Index y : image.neighbors(v))
                if (y < v)
                    earlier_[v].push_back(y);
        }
    }

    template <typename Visit>
    void each(std::span<const Index> f, Visit&& visit)
    {
        source_ = f;
        table_.assign(f.size(), 0);
        assign(0, true, visit);
    }

private:
    template <typename Visit>
    void assign(Index x, bool same, Visit& visit)
    {
        if (x == table_.size()) {
            if (!same)
                visit(std::span<const Index>(table_));
            return;
        }
        for (Index c : closed_[source_[x]]) {
            bool ok = true;
            for (Index y : earlier_[x])
                if (!image_.adjacent_or_equal(table_[y], c)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            table_[x] = c;
            assign(x + 1, same && c == source_[x], visit);
        }
    }

    const DigitalImage& image_;
    std::vector<std::vector<Index>> closed_;
    std::vector<std::vector<Index>> earlier_;
    std::span<const Index> source_;
    MapTable table_;
};

std::vector<MapTable> neighbors_of(const DigitalImage& image, const MapTable& table)
{
    std::vector<MapTable> result;
    NeighborGenerator(image).each(table, [&](std::span<const Index> t) { result.emplace_back(t.begin(), t.end()); });
    return result;
}

// Breadth-first closure of `start`; stops early when `stop` returns true.
// Maps each visited table to its predecessor.
template <typename Stop>
std::unordered_map<Key, Key> explore(const DigitalImage& image, const MapTable& start, std::size_t budget, Stop stop)
{
    if (image.size() > 256)
        throw Error("homotopy search supports images of at most 256 points");
    NeighborGenerator generator(image);
    std::unordered_map<Key, Key> parent;
    Key first = key_of(start);
    parent.emplace(first, first);
    if (parent.size() > budget)
        throw BudgetExceeded(budget);
    if (stop(std::span<const Index>(start)))
        return parent;
    std::deque<Key> queue{first};
    bool done = false;
    while (!queue.empty() && !done) {
        const Key current = std::move(queue.front());
        queue.pop_front();
        const MapTable source = table_of(current);
        generator.each(source, [&](std::span<const Index> t) {
            if (done)
                return;
            auto [it, inserted] = parent.try_emplace(key_of(t), current);
            if (!inserted)
                return;
            if (parent.size() > budget)
                throw BudgetExceeded(budget);
            if (stop(t))
                done = true;
            else
                queue.push_back(it->first);
        });
    }
    return parent;
}

std::vector<MapTable> sorted_members(const std::unordered_map<Key, Key>& visited)
{
    std::vector<MapTable> members;
    members.reserve(visited.size());
    for (const auto& entry : visited)
        members.push_back(table_of(entry.first));
    std::sort(members.begin(), members.end());
    return members;
}

} // namespace

bool is_one_step_homotopic(const DigitalMap& f, const DigitalMap& g)
{
    require_same_spaces(f, g);
    return is_continuous(f) && is_continuous(g) && tracks_adjacent(f, g);
}

HomotopyValidation validate_homotopy(const HomotopyTrace& trace)
{
    HomotopyValidation result;
    auto fail = [&](std::size_t step, std::optional<Index> point, std::string why) {
        result.valid = false;
        result.step = step;
        result.point = point;
        result.violation = std::move(why);
        return result;
    };
    if (trace.steps.empty())
        return fail(0, std::nullopt, "trace has no steps");
    for (std::size_t t = 0; t < trace.steps.size(); ++t) {
        const DigitalMap& f = trace.steps[t];
        if (!(f.domain() == trace.front().domain()) || !(f.codomain() == trace.front().codomain()))
            return fail(t, std::nullopt, "step maps between different images");
        if (!is_continuous(f))
            return fail(t, std::nullopt, "step is not continuous");
        if (t > 0) {
            Index bad = 0;
            if (!tracks_adjacent(trace.steps[t - 1], f, &bad))
                return fail(t - 1, bad, "consecutive steps are neither equal nor adjacent at a point");
        }
    }
    return result;
}

std::vector<MapTable> one_step_neighbors(const DigitalMap& f)
{
    require_continuous_selfmap(f);
    return neighbors_of(f.domain(), f.table());
}

std::optional<HomotopyTrace> find_homotopy(const DigitalMap& f, const DigitalMap& g, std::size_t budget)
{
    require_same_spaces(f, g);
    require_continuous_selfmap(f);
    require_continuous_selfmap(g);
    const DigitalImage& image = f.domain();
    const Key target = key_of(g.table());
    const auto parent = explore(image, f.table(), budget, [&](std::span<const Index> t) {
        return std::equal(t.begin(), t.end(), target.begin(), target.end());
    });
    if (!parent.count(target))
        return std::nullopt;

    std::vector<Key> path{target};
    while (path.back() != key_of(f.table()))
        path.push_back(parent.at(path.back()));
    HomotopyTrace trace;
    for (auto it = path.rbegin(); it != path.rend(); ++it)
        trace.steps.emplace_back(image, table_of(*it));
    return trace;
}

std::vector<MapTable> homotopy_class(const DigitalMap& f, std::size_t budget)
{
    require_continuous_selfmap(f);
    return sorted_members(explore(f.domain(), f.table(), budget, [](std::span<const Index>) { return false; }));
}

HomotopyClassSummary summarize_class(const DigitalMap& f, std::size_t budget)
{
    const auto members = homotopy_class(f, budget);
    const DigitalImage& image = f.domain();
    const MapTable* low = nullptr;
    const MapTable* high = nullptr;
    std::size_t mf = 0, xf = 0;
    for (const auto& t : members) {
        const std::size_t count = fixed_point_count(image, t);
        if (!low || count < mf) {
            low = &t;
            mf = count;
        }
        if (!high || count > xf) {
            high = &t;
            xf = count;
        }
    }
    return {members.size(), mf, xf, DigitalMap(image, *low), DigitalMap(image, *high)};
}

namespace {

template <typename Better>
FixedPointExtreme extreme(const DigitalMap& f, std::size_t budget, std::size_t target, Better better)
{
    require_continuous_selfmap(f);
    const DigitalImage& image = f.domain();
    MapTable best = f.table();
    std::size_t value = fixed_point_count(image, best);
    bool reached = false;
    const auto visited = explore(image, f.table(), budget, [&](std::span<const Index> t) {
        const std::size_t count = fixed_point_count(image, t);
        if (better(count, value) ||
            (count == value && std::lexicographical_compare(t.begin(), t.end(), best.begin(), best.end()))) {
            best.assign(t.begin(), t.end());
            value = count;
        }
        reached = value == target;
        return reached;
    });
    std::optional<std::size_t> size;
    if (!reached)
        size = visited.size();
    return {value, DigitalMap(image, std::move(best)), size};
}

} // namespace

FixedPointExtreme mf(const DigitalMap& f, std::size_t budget)
{
    return extreme(f, budget, 0, std::less<>());
}

FixedPointExtreme xf(const DigitalMap& f, std::size_t budget)
{
    return extreme(f, budget, f.size(), std::greater<>());
}

bool is_rigid(const DigitalImage& image)
{
    return neighbors_of(image, DigitalMap::identity(image).table()).empty();
}

HomotopyTrace constant_to_fpf_homotopy(const DigitalImage& image, Index x0, Index x1)
{
    DigitalMap g = fixed_point_free_map(image, x0, x1);
    HomotopyTrace trace{{DigitalMap::constant(image, x0), std::move(g)}};
    if (!validate_homotopy(trace))
        throw std::logic_error("constant_to_fpf_homotopy: trace failed validation");
    return trace;
}

HomotopyFixedPointReport homotopy_fixed_point_report(const DigitalImage& image)
{
    HomotopyFixedPointReport report;
    if (image.size() == 1) {
        report.holds = true;
        return report;
    }
    const DigitalMap f = fixed_point_free_witness(image);
    HomotopyTrace trace{{f, f}};

    const DigitalImage interval = digital_interval(0, 1);
    const DigitalImage cylinder = normal_product(image, interval);
    MapTable table(cylinder.size());
    for (Index x = 0; x < image.size(); ++x)
        for (Index t = 0; t < interval.size(); ++t)
            table[x * interval.size() + t] = f(x);
    report.product_continuous = is_continuous(DigitalMap(cylinder, image, std::move(table)));

    const bool slices_free =
        std::all_of(trace.steps.begin(), trace.steps.end(), [](const DigitalMap& g) { return fixed_points(g).empty(); });
    report.holds = !(validate_homotopy(trace) && slices_free && report.product_continuous);
    report.witness = std::move(trace);
    return report;
}

bool has_homotopy_fixed_point_property(const DigitalImage& image)
{
    return homotopy_fixed_point_report(image).holds;
}

FixedPointFreeClassSearch search_fixed_point_free_class(const DigitalImage& image, std::size_t budget)
{
    FixedPointFreeClassSearch search;
    std::set<MapTable> unassigned;
    for_each_continuous_selfmap(image, [&](std::span<const Index> t) {
        unassigned.emplace(t.begin(), t.end());
        if (unassigned.size() > budget)
            throw BudgetExceeded(budget);
        return true;
    });
    search.maps = unassigned.size();
    while (!unassigned.empty()) {
        const MapTable start = *unassigned.begin();
        const auto members = sorted_members(explore(image, start, budget, [](std::span<const Index>) { return false; }));
        ++search.classes;
        bool free = true;
        for (const auto& t : members) {
            unassigned.erase(t);
            if (fixed_point_count(image, t) > 0)
                free = false;
        }
        if (free && !search.witness)
            search.witness = DigitalMap(image, start);
    }
    return search;
}

} // namespace digifix
