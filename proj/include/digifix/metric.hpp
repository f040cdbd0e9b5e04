#pragma once

#include "digifix/exact_real.hpp"
#include "digifix/image.hpp"

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace digifix {

/// l_p (1 <= p <= inf) or shortest-path length on the adjacency graph.
struct MetricSpec {
    enum class Kind { Lp, Path };

    Kind kind = Kind::Lp;
    double p = 1.0;

    static MetricSpec lp(double p);
    static MetricSpec l1() { return lp(1.0); }
    static MetricSpec l2() { return lp(2.0); }
    static MetricSpec linf() { return lp(std::numeric_limits<double>::infinity()); }
    static MetricSpec path() { return {Kind::Path, 0.0}; }

    bool is_lp() const { return kind == Kind::Lp; }
    /// Exact evaluation is available for l1, l2, linf and path length.
    bool is_exact() const;
    /// "l1", "l2", "linf", "path" or "l<p>".
    std::string name() const;
    /// Inverse of name(); also accepts "inf"/"1"/"2". Throws Error.
    static MetricSpec parse(const std::string& text);

    friend bool operator==(const MetricSpec&, const MetricSpec&) = default;
};

/// Floating-point l_p distance for any real p >= 1 (or infinity).
double lp_distance(const Point& x, const Point& y, double p);
/// Exact l_p distance for p in {1, 2, inf}.
ExactReal exact_lp_distance(const Point& x, const Point& y, const MetricSpec& metric);
/// Shortest-path length; throws Error on a disconnected image.
std::size_t path_distance(const DigitalImage& image, Index i, Index j);

/// Symmetric matrix of exact pairwise distances with zero diagonal.
class DistanceTable {
public:
    DistanceTable(std::size_t n, std::vector<ExactReal> values) : n_(n), values_(std::move(values)) {}

    std::size_t size() const { return n_; }
    const ExactReal& operator()(Index i, Index j) const { return values_[i * n_ + j]; }

private:
    std::size_t n_;
    std::vector<ExactReal> values_;
};

/// Distance table for (image, metric), computed on first use and cached on
/// the image. Thread-safe.
std::shared_ptr<const DistanceTable> distance_table(const DigitalImage& image, const MetricSpec& metric);

ExactReal diameter(const DigitalImage& image, const MetricSpec& metric);
/// Smallest distance between distinct points; throws Error if |X| < 2.
ExactReal min_positive_distance(const DigitalImage& image, const MetricSpec& metric);
/// Largest distance between adjacent points, or nothing if no edge exists.
std::optional<ExactReal> max_adjacent_distance(const DigitalImage& image, const MetricSpec& metric);

/// Finite-prefix form of the Cauchy-tail theorem: the smallest position n0
/// such that every entry after n0 is the same point (distance zero), or
/// nothing if the last two entries already differ.
std::optional<std::size_t> eventually_constant_tail(const std::vector<Index>& sequence, const DigitalImage& image,
                                                    const MetricSpec& metric);

/// Gaps d(i, i+1) = |1/i - 1/(i+1)| for i = 1..count under the metric
/// d(i, j) = |1/i - 1/j| on N. The gaps shrink to zero while the sequence
/// never repeats: a Cauchy sequence without a limit, which cannot happen
/// under any l_p metric. Demonstration only; not a MetricSpec.
std::vector<Rational> reciprocal_metric_gaps(std::size_t count);

} // namespace digifix
