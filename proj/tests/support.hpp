#pragma once

#include "digifix/image.hpp"
#include "digifix/map.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <set>
#include <vector>

namespace digifix::test {

/// DIGIFIX_TEST_SEED overrides the fixed default.
inline std::uint64_t seed()
{
    if (const char* env = std::getenv("DIGIFIX_TEST_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0x5eedULL;
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(seed() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

inline std::int64_t uniform(std::mt19937_64& g, std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(g);
}

/// Random point set of the given size in [0, side)^dim with c_u adjacency.
inline DigitalImage random_image(std::mt19937_64& g, std::size_t dim, std::size_t size, Coord side, unsigned u)
{
    std::size_t room = 1;
    for (std::size_t i = 0; i < dim && room < size; ++i)
        room *= static_cast<std::size_t>(side);
    size = std::min(size, room);
    std::set<Point> pts;
    while (pts.size() < size) {
        std::vector<Coord> c(dim);
        for (auto& v : c)
            v = uniform(g, 0, side - 1);
        pts.insert(Point(c));
    }
    return build_image({pts.begin(), pts.end()}, AdjacencySpec::cu(u));
}

inline MapTable random_table(std::mt19937_64& g, std::size_t n)
{
    MapTable t(n);
    for (auto& v : t)
        v = static_cast<Index>(uniform(g, 0, static_cast<std::int64_t>(n) - 1));
    return t;
}

/// Continuity straight from the definition, over all ordered pairs.
inline bool naive_continuous(const DigitalImage& x, std::span<const Index> t)
{
    for (Index a = 0; a < x.size(); ++a)
        for (Index b = 0; b < x.size(); ++b)
            if (x.adjacent(a, b) && t[a] != t[b] && !x.adjacent(t[a], t[b]))
                return false;
    return true;
}

/// All n^n tables in lexicographic order.
inline std::vector<MapTable> all_tables(std::size_t n)
{
    std::vector<MapTable> out;
    MapTable t(n, 0);
    while (true) {
        out.push_back(t);
        std::size_t i = n;
        while (i > 0 && t[i - 1] == n - 1)
            t[--i] = 0;
        if (i == 0)
            break;
        ++t[i - 1];
    }
    return out;
}

} // namespace digifix::test
