#pragma once

#include "digifix/map.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace digifix {

/// Homotopy F: X x [0, m]_Z -> Y stored as its time slices F_0, ..., F_m.
///
/// Each slice F_t must be continuous, and for each x the track t -> F(x, t)
/// must be continuous on [0, m]_Z, i.e. consecutive slices agree or are
/// adjacent at x. These are exactly the conditions on the induced functions,
/// so a homotopy is the same thing as a path in the graph whose vertices are
/// the continuous maps and whose edges join one-step homotopic pairs.
struct HomotopyTrace {
    std::vector<DigitalMap> steps;

    std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
    const DigitalMap& front() const { return steps.front(); }
    const DigitalMap& back() const { return steps.back(); }
};

inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

/// Thrown when a class or search would visit more maps than its budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::size_t budget)
        : std::runtime_error("node budget of " + std::to_string(budget) + " maps exceeded"), budget_(budget)
    {
    }
    std::size_t budget() const { return budget_; }

private:
    std::size_t budget_;
};

/// Both maps continuous and f(x) = g(x) or f(x) adjacent to g(x) for every x.
bool is_one_step_homotopic(const DigitalMap& f, const DigitalMap& g);

struct HomotopyValidation {
    bool valid = true;
    /// Step index (for slice violations) or index of the first map of the
    /// offending consecutive pair (for track violations).
    std::optional<std::size_t> step;
    std::optional<Index> point;
    std::string violation;

    explicit operator bool() const { return valid; }
};

HomotopyValidation validate_homotopy(const HomotopyTrace& trace);

/// Continuous self-maps g != f with g(x) in the closed neighborhood of f(x)
/// for every x, in lexicographic table order. Requires f continuous.
std::vector<MapTable> one_step_neighbors(const DigitalMap& f);

/// Shortest trace from f to g by breadth-first search of the map graph, or
/// nothing if g is unreachable. Throws BudgetExceeded if more than `budget`
/// maps would be visited before the search settles.
std::optional<HomotopyTrace> find_homotopy(const DigitalMap& f, const DigitalMap& g,
                                           std::size_t budget = kDefaultNodeBudget);

/// Every continuous self-map homotopic to f, in lexicographic table order.
std::vector<MapTable> homotopy_class(const DigitalMap& f, std::size_t budget = kDefaultNodeBudget);

struct HomotopyClassSummary {
    std::size_t class_size = 0;
    std::size_t mf = 0;
    std::size_t xf = 0;
    /// Lexicographically least class members realizing each extreme.
    DigitalMap mf_witness;
    DigitalMap xf_witness;
};

/// Explores the whole class of f.
HomotopyClassSummary summarize_class(const DigitalMap& f, std::size_t budget = kDefaultNodeBudget);

struct FixedPointExtreme {
    std::size_t value = 0;
    DigitalMap witness;
    /// Size of the class when it was explored completely. The search stops
    /// early once the extreme is provably reached (0 for MF, |X| for XF).
    std::optional<std::size_t> class_size;
};

/// Minimal number of fixed points over the class of f.
FixedPointExtreme mf(const DigitalMap& f, std::size_t budget = kDefaultNodeBudget);
/// Maximal number of fixed points over the class of f.
FixedPointExtreme xf(const DigitalMap& f, std::size_t budget = kDefaultNodeBudget);

/// No map other than the identity is homotopic to the identity. Decided from
/// the identity's one-step neighbors alone.
bool is_rigid(const DigitalImage& image);

/// Length-1 trace from the constant map at x0 to the fixed-point-free map
/// that sends x0 to x1 and everything else to x0.
HomotopyTrace constant_to_fpf_homotopy(const DigitalImage& image, Index x0, Index x1);

struct HomotopyFixedPointReport {
    bool holds = false;
    /// Constant-in-time homotopy [f, f] over a fixed-point-free f (|X| > 1).
    std::optional<HomotopyTrace> witness;
    /// The witness read as a map X x [0, 1]_Z -> X under the normal product
    /// adjacency is continuous.
    bool product_continuous = false;
};

HomotopyFixedPointReport homotopy_fixed_point_report(const DigitalImage& image);
/// Every homotopy of self-maps has a path of fixed points only on a singleton.
bool has_homotopy_fixed_point_property(const DigitalImage& image);

/// Result of partitioning all continuous self-maps into homotopy classes and
/// looking for a class without any map having a fixed point (XF = 0).
struct FixedPointFreeClassSearch {
    std::size_t maps = 0;
    std::size_t classes = 0;
    /// Smallest member of the first class with XF = 0, if any.
    std::optional<DigitalMap> witness;
};

FixedPointFreeClassSearch search_fixed_point_free_class(const DigitalImage& image,
                                                        std::size_t budget = kDefaultNodeBudget);

} // namespace digifix
