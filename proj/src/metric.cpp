#include "digifix/metric.hpp"

#include "metric_cache.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace digifix {

using boost::multiprecision::cpp_int;

MetricSpec MetricSpec::lp(double p)
{
    if (!(p >= 1.0))
        throw Error("l_p metric requires p >= 1");
    return {Kind::Lp, p};
}

bool MetricSpec::is_exact() const
{
    return kind == Kind::Path || p == 1.0 || p == 2.0 || std::isinf(p);
}

std::string MetricSpec::name() const
{
    if (kind == Kind::Path)
        return "path";
    if (std::isinf(p))
        return "linf";
    std::ostringstream os;
    os << "l" << p;
    return os.str();
}

MetricSpec MetricSpec::parse(const std::string& text)
{
    if (text == "path")
        return path();
    if (text == "linf" || text == "inf")
        return linf();
    std::string digits = text;
    if (!digits.empty() && (digits.front() == 'l' || digits.front() == 'L'))
        digits.erase(0, 1);
    try {
        std::size_t used = 0;
        const double p = std::stod(digits, &used);
        if (used == digits.size())
            return lp(p);
    } catch (const std::logic_error&) {
    }
    throw Error("unknown metric '" + text + "' (expected l1, l2, linf or path)");
}

double lp_distance(const Point& x, const Point& y, double p)
{
    if (x.dim() != y.dim())
        throw Error("lp_distance: dimension mismatch");
    if (!(p >= 1.0))
        throw Error("lp_distance: p must be at least 1");
    if (std::isinf(p)) {
        double m = 0.0;
        for (std::size_t i = 0; i < x.dim(); ++i)
            m = std::max(m, std::fabs(static_cast<double>(x[i] - y[i])));
        return m;
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i)
        sum += std::pow(std::fabs(static_cast<double>(x[i] - y[i])), p);
    return std::pow(sum, 1.0 / p);
}

ExactReal exact_lp_distance(const Point& x, const Point& y, const MetricSpec& metric)
{
    if (x.dim() != y.dim())
        throw Error("lp_distance: dimension mismatch");
    if (!metric.is_lp() || !metric.is_exact())
        throw Error("exact distance is available for l1, l2 and linf only, not " + metric.name());
    cpp_int acc = 0;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        const cpp_int diff = x[i] > y[i] ? cpp_int(x[i]) - y[i] : cpp_int(y[i]) - x[i];
        if (metric.p == 1.0)
            acc += diff;
        else if (metric.p == 2.0)
            acc += diff * diff;
        else
            acc = std::max(acc, diff);
    }
    if (metric.p == 2.0)
        return ExactReal::sqrt_of(acc);
    return ExactReal(Rational(acc));
}

namespace {

std::vector<std::size_t> bfs_distances(const DigitalImage& image, Index source)
{
    constexpr auto unreached = static_cast<std::size_t>(-1);
    std::vector<std::size_t> dist(image.size(), unreached);
    std::queue<Index> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        const Index v = frontier.front();
        frontier.pop();
        for (Index w : image.neighbors(v)) {
            if (dist[w] == unreached) {
                dist[w] = dist[v] + 1;
                frontier.push(w);
            }
        }
    }
    return dist;
}

} // namespace

std::size_t path_distance(const DigitalImage& image, Index i, Index j)
{
    if (i >= image.size() || j >= image.size())
        throw Error("path_distance: index out of range");
    if (!is_connected(image))
        throw Error("path-length metric requires a connected image");
    return bfs_distances(image, i)[j];
}

std::shared_ptr<const DistanceTable> distance_table(const DigitalImage& image, const MetricSpec& metric)
{
    auto& cache = image.metric_cache();
    const auto key = std::pair(static_cast<int>(metric.kind), metric.p);
    {
        std::lock_guard lock(cache.mutex);
        if (auto it = cache.tables.find(key); it != cache.tables.end())
            return it->second;
    }

    const std::size_t n = image.size();
    std::vector<ExactReal> values(n * n);
    if (metric.kind == MetricSpec::Kind::Path) {
        if (!is_connected(image))
            throw Error("path-length metric requires a connected image");
        for (Index i = 0; i < n; ++i) {
            const auto dist = bfs_distances(image, i);
            for (Index j = 0; j < n; ++j)
                values[i * n + j] = ExactReal(static_cast<std::int64_t>(dist[j]));
        }
    } else {
        for (Index i = 0; i < n; ++i)
            for (Index j = i + 1; j < n; ++j)
                values[i * n + j] = values[j * n + i] = exact_lp_distance(image.point(i), image.point(j), metric);
    }
    auto table = std::make_shared<const DistanceTable>(n, std::move(values));

    std::lock_guard lock(cache.mutex);
    return cache.tables.emplace(key, std::move(table)).first->second;
}

ExactReal diameter(const DigitalImage& image, const MetricSpec& metric)
{
    const auto table = distance_table(image, metric);
    ExactReal best;
    for (Index i = 0; i < image.size(); ++i)
        for (Index j = i + 1; j < image.size(); ++j)
            best = max(best, (*table)(i, j));
    return best;
}

ExactReal min_positive_distance(const DigitalImage& image, const MetricSpec& metric)
{
    if (image.size() < 2)
        throw Error("min_positive_distance requires at least two points");
    const auto table = distance_table(image, metric);
    ExactReal best = (*table)(0, 1);
    for (Index i = 0; i < image.size(); ++i)
        for (Index j = i + 1; j < image.size(); ++j)
            best = min(best, (*table)(i, j));
    return best;
}

std::optional<ExactReal> max_adjacent_distance(const DigitalImage& image, const MetricSpec& metric)
{
    const auto table = distance_table(image, metric);
    std::optional<ExactReal> best;
    for (Index i = 0; i < image.size(); ++i)
        for (Index j : image.neighbors(i))
            if (!best || *best < (*table)(i, j))
                best = (*table)(i, j);
    return best;
}

std::optional<std::size_t> eventually_constant_tail(const std::vector<Index>& sequence, const DigitalImage& image,
                                                    const MetricSpec& metric)
{
    if (sequence.empty())
        throw Error("eventually_constant_tail requires a nonempty sequence");
    for (Index v : sequence)
        if (v >= image.size())
            throw Error("eventually_constant_tail: index out of range");
    const auto table = distance_table(image, metric);
    const std::size_t last = sequence.size() - 1;
    if (last == 0)
        return 0;
    if (!(*table)(sequence[last - 1], sequence[last]).is_zero())
        return std::nullopt;
    std::size_t start = last - 1;
    while (start > 0 && (*table)(sequence[start - 1], sequence[last]).is_zero())
        --start;
    // entries start..last coincide; everything after position start - 1 is constant
    return start == 0 ? 0 : start - 1;
}

std::vector<Rational> reciprocal_metric_gaps(std::size_t count)
{
    std::vector<Rational> gaps;
    for (std::size_t i = 1; i <= count; ++i) {
        const Rational a(1, static_cast<long long>(i));
        const Rational b(1, static_cast<long long>(i + 1));
        gaps.push_back(a - b);
    }
    return gaps;
}

} // namespace digifix
