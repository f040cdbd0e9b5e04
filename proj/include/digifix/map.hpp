#pragma once

#include "digifix/image.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace digifix {

using MapTable = std::vector<Index>;

/// f: domain -> codomain, stored as the codomain index of each domain index.
class DigitalMap {
public:
    DigitalMap(DigitalImage domain, DigitalImage codomain, MapTable table);
    /// Self-map.
    DigitalMap(DigitalImage image, MapTable table);

    static DigitalMap identity(const DigitalImage& image);
    static DigitalMap constant(const DigitalImage& image, Index value);

    const DigitalImage& domain() const { return domain_; }
    const DigitalImage& codomain() const { return codomain_; }
    const MapTable& table() const { return table_; }
    Index operator()(Index x) const { return table_[x]; }
    std::size_t size() const { return table_.size(); }
    bool is_self_map() const { return domain_ == codomain_; }

    /// g after this map (this map runs first).
    DigitalMap then(const DigitalMap& g) const;

    friend bool operator==(const DigitalMap& a, const DigitalMap& b)
    {
        return a.table_ == b.table_ && a.domain_ == b.domain_ && a.codomain_ == b.codomain_;
    }

private:
    DigitalImage domain_;
    DigitalImage codomain_;
    MapTable table_;
};

/// Adjacent points go to equal or adjacent points.
bool is_continuous(const DigitalMap& f);
bool is_continuous(const DigitalImage& domain, const DigitalImage& codomain, std::span<const Index> table);

/// Indices with f(i) = i. Requires a self-map.
std::vector<Index> fixed_points(const DigitalMap& f);
/// Indices with f(i) = i or f(i) adjacent to i. Requires a self-map.
std::vector<Index> approximate_fixed_points(const DigitalMap& f);
std::size_t fixed_point_count(const DigitalImage& image, std::span<const Index> table);
bool has_approximate_fixed_point(const DigitalImage& image, std::span<const Index> table);

bool is_constant(const DigitalMap& f);
/// Requires a self-map.
bool is_onto(const DigitalMap& f);

/// Called for each map found; return false to stop the search.
using TableVisitor = std::function<bool(std::span<const Index>)>;

/// Visits every continuous self-map exactly once. Points are assigned in
/// breadth-first order so each new point (beyond the first of each component)
/// already has an assigned neighbor, and partial assignments violating
/// continuity on an assigned edge are pruned. Returns false if the visitor
/// stopped the search.
bool for_each_continuous_selfmap(const DigitalImage& image, const TableVisitor& visit);

/// Same search restricted to f(x) in candidates[x] (each list sorted).
bool for_each_continuous_selfmap(const DigitalImage& image, const std::vector<std::vector<Index>>& candidates,
                                 const TableVisitor& visit);

/// Every continuous self-map in lexicographic table order. `limit` caps the
/// number of maps collected (before sorting); zero means no cap.
std::vector<DigitalMap> enumerate_continuous_selfmaps(const DigitalImage& image, std::size_t limit = 0);

/// Every self-map (continuous or not) in lexicographic table order; the
/// visitor may stop early. Requires |X|^|X| to fit in 64 bits.
bool for_each_selfmap(const DigitalImage& image, const TableVisitor& visit);
/// Every bijective self-map in lexicographic order.
bool for_each_permutation(const DigitalImage& image, const TableVisitor& visit);

struct PropertyVerdict {
    bool holds = true;
    /// Continuous self-map violating the property, when it fails.
    std::optional<DigitalMap> witness;
    std::size_t maps_examined = 0;
};

/// Fixed point property: every continuous self-map has a fixed point.
PropertyVerdict has_fpp(const DigitalImage& image);
/// Approximate fixed point property.
PropertyVerdict has_afpp(const DigitalImage& image);

/// g(x) = x0 for x != x0, g(x0) = x1: continuous with no fixed point.
/// Requires a connected image with more than one point and x0 adjacent to x1.
DigitalMap fixed_point_free_map(const DigitalImage& image, Index x0, Index x1);
/// A continuous fixed-point-free self-map of any image with more than one
/// point (connected or not); the construction above on the first component
/// with an edge, otherwise a constant map shifted off its own value.
DigitalMap fixed_point_free_witness(const DigitalImage& image);

/// f(y_i) = y_{(i + k) mod n} on a cyclically indexed image.
DigitalMap cyclic_shift(const DigitalImage& image, std::size_t k);
/// p -> -p; requires the point set to be symmetric about the origin.
DigitalMap antipodal_map(const DigitalImage& image);
/// The `example-4-2` fixture map: p1, p2 -> p1 and p3 -> p2. A contraction
/// under l1 that is not continuous.
DigitalMap example_4_2_map();

} // namespace digifix
