#include "digifix/classify.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace digifix {

namespace {

const ExactReal kZero;
const ExactReal kOne(1);
const ExactReal kHalf = ExactReal::ratio(1, 2);

struct Distances {
    std::shared_ptr<const DistanceTable> domain;
    std::shared_ptr<const DistanceTable> codomain;

    Distances(const DigitalMap& f, const MetricSpec& metric)
        : domain(distance_table(f.domain(), metric)),
          codomain(f.is_self_map() ? domain : distance_table(f.codomain(), metric))
    {
    }

    const ExactReal& d(Index x, Index y) const { return (*domain)(x, y); }
    const ExactReal& image(Index u, Index v) const { return (*codomain)(u, v); }
};

void require_self_map(const DigitalMap& f)
{
    if (!f.is_self_map())
        throw Error("operation requires a self-map (domain = codomain)");
}

void require_open_range(const ExactReal& value, const ExactReal& lo, const ExactReal& hi, const char* what)
{
    if (!(lo < value && value < hi))
        throw Error(std::string(what) + " must lie in (" + lo.to_string() + ", " + hi.to_string() + ")");
}

// Max over pairs of num/den, skipping 0/0. Nothing if some pair is x/0, x > 0.
template <typename Num, typename Den>
std::optional<ExactReal> max_ratio(std::size_t n, Num num, Den den)
{
    ExactReal best;
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            const ExactReal top = num(x, y);
            if (top.is_zero())
                continue;
            const ExactReal bottom = den(x, y);
            if (bottom.is_zero())
                return std::nullopt;
            best = max(best, top / bottom);
        }
    }
    return best;
}

} // namespace

// ---------------------------------------------------------------- PsiFunction

PsiFunction PsiFunction::tabulated(std::vector<std::pair<Rational, Rational>> breakpoints)
{
    if (breakpoints.empty() || breakpoints.front().first != 0)
        throw Error("tabulated psi must start at t = 0");
    for (std::size_t k = 0; k < breakpoints.size(); ++k) {
        if (breakpoints[k].second < 0)
            throw Error("tabulated psi values must be nonnegative");
        if (k > 0 && !(breakpoints[k - 1].first < breakpoints[k].first))
            throw Error("tabulated psi breakpoints must increase strictly");
        if (k > 0 && breakpoints[k].second < breakpoints[k - 1].second)
            throw Error("tabulated psi must be nondecreasing");
    }
    return PsiFunction(Tabulated{std::move(breakpoints)});
}

ExactReal PsiFunction::operator()(const ExactReal& t) const
{
    if (t.sign() < 0)
        throw Error("psi is defined on [0, inf)");
    if (const auto* lin = std::get_if<Linear>(&variant_))
        return lin->slope * t;
    if (std::holds_alternative<ConstantZero>(variant_))
        return {};
    const auto& points = std::get<Tabulated>(variant_).breakpoints;
    for (std::size_t k = 1; k < points.size(); ++k) {
        const ExactReal t0(points[k - 1].first), t1(points[k].first);
        if (t <= t1) {
            const ExactReal v0(points[k - 1].second), v1(points[k].second);
            return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
        }
    }
    return ExactReal(points.back().second);
}

bool PsiFunction::in_psi() const
{
    if (const auto* lin = std::get_if<Linear>(&variant_))
        return kZero < lin->slope && lin->slope < kOne;
    return true;
}

bool PsiFunction::iterate_decay_holds(std::span<const ExactReal> samples, std::size_t steps) const
{
    if (!in_psi())
        return false;
    // Largest observed ratio psi^{k+1}(t) / psi^k(t) must stay below 1.
    ExactReal worst;
    for (const auto& sample : samples) {
        ExactReal current = sample;
        for (std::size_t k = 0; k < steps && !current.is_zero(); ++k) {
            ExactReal next = (*this)(current);
            worst = max(worst, next / current);
            current = std::move(next);
        }
    }
    return worst < kOne;
}

std::string PsiFunction::describe() const
{
    if (const auto* lin = std::get_if<Linear>(&variant_))
        return "linear(" + lin->slope.to_string() + ")";
    if (std::holds_alternative<ConstantZero>(variant_))
        return "zero";
    std::ostringstream os;
    os << "tabulated(";
    const auto& points = std::get<Tabulated>(variant_).breakpoints;
    for (std::size_t k = 0; k < points.size(); ++k)
        os << (k ? ", " : "") << "(" << points[k].first << ", " << points[k].second << ")";
    os << ")";
    return os.str();
}

// ----------------------------------------------------------------- PairWeight

PairWeight::PairWeight(std::size_t n, std::vector<ExactReal> values) : n_(n), values_(std::move(values))
{
    if (values_.size() != n * n)
        throw Error("pair weight must cover every ordered pair");
    for (const auto& v : values_)
        if (v.sign() < 0)
            throw Error("pair weights must be nonnegative");
}

PairWeight PairWeight::constant(std::size_t n, const ExactReal& value)
{
    return {n, std::vector<ExactReal>(n * n, value)};
}

PairWeight PairWeight::distance(const DigitalImage& image, const MetricSpec& metric)
{
    const auto table = distance_table(image, metric);
    const std::size_t n = image.size();
    std::vector<ExactReal> values(n * n);
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            values[x * n + y] = (*table)(x, y);
    return {n, std::move(values)};
}

std::string to_string(StrictVerdict v)
{
    switch (v) {
    case StrictVerdict::Holds:
        return "holds";
    case StrictVerdict::Boundary:
        return "boundary";
    case StrictVerdict::Fails:
        return "fails";
    }
    return "?";
}

// ---------------------------------------------------------------- contraction

ExactReal contraction_modulus(const DigitalMap& f, const MetricSpec& metric)
{
    const Distances dist(f, metric);
    ExactReal best;
    for (Index x = 0; x < f.size(); ++x)
        for (Index y = x + 1; y < f.size(); ++y)
            best = max(best, dist.image(f(x), f(y)) / dist.d(x, y));
    return best;
}

StrictVerdict contraction_at(const DigitalMap& f, const MetricSpec& metric, const ExactReal& alpha)
{
    require_open_range(alpha, kZero, kOne, "contraction multiplier");
    const ExactReal modulus = contraction_modulus(f, metric);
    if (modulus < alpha)
        return StrictVerdict::Holds;
    return modulus == alpha ? StrictVerdict::Boundary : StrictVerdict::Fails;
}

// ---------------------------------------------------------- Kannan/Chatterjea

namespace {

ExactReal kannan_rhs(const Distances& dist, const DigitalMap& f, Index x, Index y)
{
    return dist.d(x, f(x)) + dist.d(y, f(y));
}

ExactReal chatterjea_rhs(const Distances& dist, const DigitalMap& f, Index x, Index y)
{
    return dist.d(x, f(y)) + dist.d(y, f(x));
}

template <typename Rhs>
bool holds_for_all(const DigitalMap& f, const Distances& dist, const ExactReal& alpha, Rhs rhs)
{
    for (Index x = 0; x < f.size(); ++x)
        for (Index y = 0; y < f.size(); ++y)
            if (alpha * rhs(dist, f, x, y) < dist.d(f(x), f(y)))
                return false;
    return true;
}

} // namespace

bool is_kannan(const DigitalMap& f, const MetricSpec& metric, const ExactReal& alpha)
{
    require_self_map(f);
    require_open_range(alpha, kZero, kHalf, "Kannan multiplier");
    return holds_for_all(f, Distances(f, metric), alpha, kannan_rhs);
}

std::optional<ExactReal> kannan_min_alpha(const DigitalMap& f, const MetricSpec& metric)
{
    require_self_map(f);
    const Distances dist(f, metric);
    return max_ratio(
        f.size(), [&](Index x, Index y) { return dist.d(f(x), f(y)); },
        [&](Index x, Index y) { return kannan_rhs(dist, f, x, y); });
}

bool is_chatterjea(const DigitalMap& f, const MetricSpec& metric, const ExactReal& alpha)
{
    require_self_map(f);
    require_open_range(alpha, kZero, kHalf, "Chatterjea multiplier");
    return holds_for_all(f, Distances(f, metric), alpha, chatterjea_rhs);
}

std::optional<ExactReal> chatterjea_min_alpha(const DigitalMap& f, const MetricSpec& metric)
{
    require_self_map(f);
    const Distances dist(f, metric);
    return max_ratio(
        f.size(), [&](Index x, Index y) { return dist.d(f(x), f(y)); },
        [&](Index x, Index y) { return chatterjea_rhs(dist, f, x, y); });
}

// ---------------------------------------------------------------------- Reich

bool is_reich(const DigitalMap& f, const MetricSpec& metric, const ExactReal& a, const ExactReal& b,
              const ExactReal& c)
{
    require_self_map(f);
    if (a.sign() < 0 || b.sign() < 0 || c.sign() < 0 || !(a + b + c < kOne))
        throw Error("Reich weights must be nonnegative with a + b + c < 1");
    const Distances dist(f, metric);
    for (Index x = 0; x < f.size(); ++x)
        for (Index y = 0; y < f.size(); ++y)
            if (a * dist.d(x, f(x)) + b * dist.d(y, f(y)) + c * dist.d(x, y) < dist.d(f(x), f(y)))
                return false;
    return true;
}

ReichWeights reich_min_weights(const DigitalMap& f, const MetricSpec& metric)
{
    require_self_map(f);
    const Distances dist(f, metric);

    // Half-spaces coeff . (a, b, c) >= rhs.
    using Row = std::array<ExactReal, 4>;
    std::vector<Row> rows;
    for (Index x = 0; x < f.size(); ++x) {
        for (Index y = 0; y < f.size(); ++y) {
            const ExactReal& lhs = dist.d(f(x), f(y));
            if (lhs.is_zero())
                continue;
            Row row{dist.d(x, f(x)), dist.d(y, f(y)), dist.d(x, y), lhs};
            if (std::find(rows.begin(), rows.end(), row) == rows.end())
                rows.push_back(std::move(row));
        }
    }
    if (rows.empty())
        return {};

    std::vector<Row> planes = rows;
    planes.push_back({kOne, kZero, kZero, kZero});
    planes.push_back({kZero, kOne, kZero, kZero});
    planes.push_back({kZero, kZero, kOne, kZero});

    auto feasible = [&](const std::array<ExactReal, 3>& w) {
        for (int i = 0; i < 3; ++i)
            if (w[i].sign() < 0)
                return false;
        for (const auto& r : rows)
            if (r[0] * w[0] + r[1] * w[1] + r[2] * w[2] < r[3])
                return false;
        return true;
    };
    auto det3 = [](const Row& p, const Row& q, const Row& r, int skip) {
        // determinant with column `skip` replaced by the right-hand side
        auto col = [&](const Row& row, int j) -> const ExactReal& { return j == skip ? row[3] : row[j]; };
        return col(p, 0) * (col(q, 1) * col(r, 2) - col(q, 2) * col(r, 1)) -
               col(p, 1) * (col(q, 0) * col(r, 2) - col(q, 2) * col(r, 0)) +
               col(p, 2) * (col(q, 0) * col(r, 1) - col(q, 1) * col(r, 0));
    };

    std::optional<ReichWeights> best;
    const std::size_t m = planes.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            for (std::size_t k = j + 1; k < m; ++k) {
                const ExactReal det = det3(planes[i], planes[j], planes[k], -1);
                if (det.is_zero())
                    continue;
                std::array<ExactReal, 3> w;
                for (int c = 0; c < 3; ++c)
                    w[c] = det3(planes[i], planes[j], planes[k], c) / det;
                if (!feasible(w))
                    continue;
                ReichWeights candidate{w[0], w[1], w[2]};
                if (!best || candidate.sum() < best->sum())
                    best = std::move(candidate);
            }
        }
    }
    // c alone always satisfies every row (d(x, y) > 0 whenever d(f x, f y) > 0),
    // so the region is nonempty and some vertex is optimal.
    return *best;
}

// ------------------------------------------------------- Zamfirescu / Rhoades

namespace {

ExactReal zamfirescu_bound(const Distances& dist, const DigitalMap& f, Index x, Index y)
{
    return max(dist.d(x, y), max((dist.d(x, f(x)) + dist.d(y, f(y))) * kHalf,
                                 (dist.d(x, f(y)) + dist.d(y, f(x))) * kHalf));
}

ExactReal rhoades_bound(const Distances& dist, const DigitalMap& f, Index x, Index y)
{
    return max(max(dist.d(x, y), (dist.d(x, f(x)) + dist.d(y, f(y))) * kHalf),
               max(dist.d(x, f(x)), dist.d(y, f(y))));
}

} // namespace

bool is_zamfirescu(const DigitalMap& f, const MetricSpec& metric, const ExactReal& alpha)
{
    require_self_map(f);
    require_open_range(alpha, kZero, kOne, "Zamfirescu multiplier");
    return holds_for_all(f, Distances(f, metric), alpha, zamfirescu_bound);
}

bool is_rhoades(const DigitalMap& f, const MetricSpec& metric, const ExactReal& alpha)
{
    require_self_map(f);
    require_open_range(alpha, kZero, kOne, "Rhoades multiplier");
    return holds_for_all(f, Distances(f, metric), alpha, rhoades_bound);
}

ExactReal zamfirescu_min_alpha(const DigitalMap& f, const MetricSpec& metric)
{
    require_self_map(f);
    const Distances dist(f, metric);
    // the bound dominates d(x, y) > 0 whenever the left side is positive
    return *max_ratio(
        f.size(), [&](Index x, Index y) { return dist.d(f(x), f(y)); },
        [&](Index x, Index y) { return zamfirescu_bound(dist, f, x, y); });
}

ExactReal rhoades_min_alpha(const DigitalMap& f, const MetricSpec& metric)
{
    require_self_map(f);
    const Distances dist(f, metric);
    return *max_ratio(
        f.size(), [&](Index x, Index y) { return dist.d(f(x), f(y)); },
        [&](Index x, Index y) { return rhoades_bound(dist, f, x, y); });
}

// --------------------------------------------------- uniformly locally contr.

bool is_uniformly_locally_contractive(const DigitalMap& f, const MetricSpec& metric, const ExactReal& alpha)
{
    require_self_map(f);
    if (alpha.sign() < 0 || !(alpha < kOne))
        throw Error("uniformly locally contractive multiplier must lie in [0, 1)");
    const Distances dist(f, metric);
    for (Index x = 0; x < f.size(); ++x)
        for (Index y = 0; y < f.size(); ++y)
            if (dist.d(x, y) <= kOne && alpha * dist.d(x, y) < dist.d(f(x), f(y)))
                return false;
    return true;
}

ExactReal ulc_min_alpha(const DigitalMap& f, const MetricSpec& metric)
{
    require_self_map(f);
    const Distances dist(f, metric);
    ExactReal best;
    for (Index x = 0; x < f.size(); ++x)
        for (Index y = x + 1; y < f.size(); ++y)
            if (dist.d(x, y) <= kOne)
                best = max(best, dist.d(f(x), f(y)) / dist.d(x, y));
    return best;
}

// ------------------------------------------------------------- alpha-psi etc.

bool is_alpha_psi_contractive(const DigitalMap& f, const MetricSpec& metric, const PairWeight& w,
                              const PsiFunction& psi)
{
    require_self_map(f);
    if (w.size() != f.size())
        throw Error("pair weight size does not match the map");
    const Distances dist(f, metric);
    for (Index x = 0; x < f.size(); ++x)
        for (Index y = 0; y < f.size(); ++y)
            if (psi(dist.d(x, y)) < w(x, y) * dist.d(f(x), f(y)))
                return false;
    return true;
}

bool is_admissible(const DigitalMap& f, const PairWeight& w)
{
    require_self_map(f);
    if (w.size() != f.size())
        throw Error("pair weight size does not match the map");
    for (Index x = 0; x < f.size(); ++x)
        for (Index y = 0; y < f.size(); ++y)
            if (kOne <= w(x, y) && w(f(x), f(y)) < kOne)
                return false;
    return true;
}

bool is_beta_psi_phi_expansive(const DigitalMap& f, const MetricSpec& metric, const PairWeight& w,
                               const PsiFunction& psi, const PsiFunction& phi)
{
    require_self_map(f);
    if (!psi.in_psi() || !phi.in_psi())
        throw Error("psi and phi must belong to the comparison-function family");
    if (w.size() != f.size())
        throw Error("pair weight size does not match the map");
    const Distances dist(f, metric);
    for (Index x = 0; x < f.size(); ++x) {
        for (Index y = 0; y < f.size(); ++y) {
            const ExactReal& d = dist.d(x, y);
            if (psi(dist.d(f(x), f(y))) < w(x, y) * psi(d) + phi(d))
                return false;
        }
    }
    return true;
}

// ------------------------------------------------------------------ expansive

ExactReal expansive_modulus(const DigitalMap& f, const MetricSpec& metric)
{
    if (f.size() < 2)
        throw Error("expansive modulus requires at least two points");
    const Distances dist(f, metric);
    std::optional<ExactReal> best;
    for (Index x = 0; x < f.size(); ++x) {
        for (Index y = x + 1; y < f.size(); ++y) {
            ExactReal ratio = dist.image(f(x), f(y)) / dist.d(x, y);
            if (!best || ratio < *best)
                best = std::move(ratio);
        }
    }
    return *best;
}

bool is_expansive(const DigitalMap& f, const MetricSpec& metric, const ExactReal& k)
{
    if (!(kOne < k))
        throw Error("expansive constant must exceed 1");
    return k <= expansive_modulus(f, metric);
}

// --------------------------------------------------- weakly uniformly strict

bool is_weakly_uniformly_strict(const DigitalMap& f, const MetricSpec& metric, StrictnessVariant variant)
{
    require_self_map(f);
    const Distances dist(f, metric);
    const std::size_t n = f.size();

    if (variant == StrictnessVariant::Weak) {
        // eps = d(x, y) with delta below the next gap isolates the pair itself
        for (Index x = 0; x < n; ++x)
            for (Index y = x + 1; y < n; ++y)
                if (!(dist.d(f(x), f(y)) < dist.d(x, y)))
                    return false;
        return true;
    }

    std::set<ExactReal> realized;
    for (Index x = 0; x < n; ++x)
        for (Index y = x + 1; y < n; ++y)
            realized.insert(dist.d(x, y));

    // Every eps > 0 falls in one of: (0, r_0), {r_k}, (r_k, r_{k+1}) or beyond
    // the largest distance. Within each piece, delta = (next realized distance
    // above eps) - eps leaves (eps, eps + delta) free of realized distances,
    // so no pair meets the hypothesis. Check that choice piece by piece using
    // one representative eps per piece.
    std::vector<ExactReal> representatives;
    ExactReal previous;
    for (const auto& r : realized) {
        representatives.push_back((previous + r) * kHalf);
        representatives.push_back(r);
        previous = r;
    }
    representatives.push_back(previous + kOne);

    for (const auto& eps : representatives) {
        if (eps.sign() <= 0)
            continue;
        const auto next = realized.upper_bound(eps);
        const ExactReal delta = next == realized.end() ? kOne : *next - eps;
        for (Index x = 0; x < n; ++x) {
            for (Index y = x + 1; y < n; ++y) {
                const ExactReal& d = dist.d(x, y);
                if (eps < d && d < eps + delta && !(dist.d(f(x), f(y)) < eps))
                    return false;
            }
        }
    }
    return true;
}

// ------------------------------------------------------------------- intimate

bool is_intimate(const DigitalMap& f, const DigitalMap& g, const MetricSpec& metric)
{
    require_self_map(f);
    require_self_map(g);
    if (!(f.domain() == g.domain()))
        throw Error("intimacy requires maps on the same image");
    const Distances dist(f, metric);
    for (Index x = 0; x < f.size(); ++x) {
        if (f(x) != g(x))
            continue;
        const Index t = f(x);
        if (dist.d(f(t), t) < dist.d(g(t), t))
            return false;
    }
    return true;
}

// ------------------------------------------------------------------- classify

ClassificationReport classify(const DigitalMap& f, const MetricSpec& metric, const std::optional<ExactReal>& alpha)
{
    require_self_map(f);
    if (!metric.is_exact())
        throw Error("classification requires l1, l2, linf or path metric");
    ClassificationReport r;
    r.metric = metric.name();
    r.continuous = is_continuous(f);
    r.constant = is_constant(f);
    r.onto = is_onto(f);
    r.fixed = fixed_points(f);
    r.approximate_fixed = approximate_fixed_points(f);

    r.contraction_modulus = contraction_modulus(f, metric);
    r.contraction = r.contraction_modulus < kOne;
    r.kannan_min_alpha = kannan_min_alpha(f, metric);
    r.kannan = r.kannan_min_alpha && *r.kannan_min_alpha < kHalf;
    r.chatterjea_min_alpha = chatterjea_min_alpha(f, metric);
    r.chatterjea = r.chatterjea_min_alpha && *r.chatterjea_min_alpha < kHalf;
    r.reich_weights = reich_min_weights(f, metric);
    r.reich = r.reich_weights.sum() < kOne;
    r.zamfirescu_min_alpha = zamfirescu_min_alpha(f, metric);
    r.zamfirescu = r.zamfirescu_min_alpha < kOne;
    r.rhoades_min_alpha = rhoades_min_alpha(f, metric);
    r.rhoades = r.rhoades_min_alpha < kOne;
    r.ulc_min_alpha = ulc_min_alpha(f, metric);
    r.uniformly_locally_contractive = r.ulc_min_alpha < kOne;

    const std::size_t n = f.size();
    if (r.contraction) {
        const ExactReal slope = max(r.contraction_modulus, kHalf);
        r.alpha_psi_linear =
            is_alpha_psi_contractive(f, metric, PairWeight::constant(n, kOne), PsiFunction::linear(slope));
    }
    r.beta_psi_phi_degenerate = is_beta_psi_phi_expansive(f, metric, PairWeight::constant(n, kZero),
                                                          PsiFunction::zero(), PsiFunction::zero());
    if (n >= 2) {
        r.expansive_modulus = expansive_modulus(f, metric);
        r.expansive = kOne < *r.expansive_modulus;
    }
    r.weakly_uniformly_strict = is_weakly_uniformly_strict(f, metric, StrictnessVariant::Strict);
    r.weakly_uniformly_strict_weak = is_weakly_uniformly_strict(f, metric, StrictnessVariant::Weak);

    if (alpha) {
        require_open_range(*alpha, kZero, kOne, "alpha");
        ClassificationReport::AtAlpha at;
        at.alpha = *alpha;
        at.contraction = contraction_at(f, metric, *alpha);
        if (*alpha < kHalf) {
            at.kannan = is_kannan(f, metric, *alpha);
            at.chatterjea = is_chatterjea(f, metric, *alpha);
        }
        at.zamfirescu = is_zamfirescu(f, metric, *alpha);
        at.rhoades = is_rhoades(f, metric, *alpha);
        at.uniformly_locally_contractive = is_uniformly_locally_contractive(f, metric, *alpha);
        r.at_alpha = std::move(at);
    }
    return r;
}

// --------------------------------------------------------- exhaustive checks

namespace {

void require_lp(const MetricSpec& metric)
{
    if (!metric.is_lp() || !metric.is_exact())
        throw Error("this check requires an exact l_p metric (l1, l2 or linf)");
}

// Runs `qualifies` over every self-map and records non-constant qualifiers.
template <typename Qualifies>
void sweep_all_selfmaps(const DigitalImage& image, ExhaustiveCheck& check, Qualifies qualifies)
{
    for_each_selfmap(image, [&](std::span<const Index> t) {
        ++check.maps_examined;
        const DigitalMap f(image, MapTable(t.begin(), t.end()));
        if (qualifies(f)) {
            ++check.qualifying;
            if (!is_constant(f))
                check.counterexamples.push_back(f.table());
        }
        return true;
    });
}

} // namespace

ExhaustiveCheck check_contraction_implies_constant(const DigitalImage& image, const MetricSpec& metric)
{
    require_lp(metric);
    ExhaustiveCheck check;
    if (image.size() < 2) {
        check.precondition_note = "singleton: every self-map is constant";
        return check;
    }
    if (!is_connected(image)) {
        check.precondition_met = false;
        check.precondition_note = "image is not connected";
        return check;
    }
    const ExactReal m2 = min_positive_distance(image, metric);
    const ExactReal m1 = *max_adjacent_distance(image, metric);
    check.threshold = min(kOne, m2 / m1);
    for_each_selfmap(image, [&](std::span<const Index> t) {
        ++check.maps_examined;
        const DigitalMap f(image, MapTable(t.begin(), t.end()));
        const ExactReal modulus = contraction_modulus(f, metric);
        if (modulus < check.threshold) {
            ++check.qualifying;
            if (!is_constant(f))
                check.counterexamples.push_back(f.table());
        } else if (modulus == check.threshold && !is_constant(f)) {
            check.boundary.push_back(f.table());
        }
        return true;
    });
    return check;
}

ConstancyThresholds constancy_thresholds(const DigitalImage& image, const MetricSpec& metric)
{
    require_lp(metric);
    if (image.size() < 2)
        throw Error("constancy thresholds require positive diameter");
    const ExactReal diam = diameter(image, metric);
    return {kOne / (ExactReal(2) * diam), kOne / (ExactReal(3) * diam)};
}

ExhaustiveCheck check_kannan_chatterjea_constancy(const DigitalImage& image, const MetricSpec& metric)
{
    ExhaustiveCheck check;
    check.threshold = constancy_thresholds(image, metric).kannan_chatterjea;
    // some alpha in (0, T) works iff the least alpha is below T
    sweep_all_selfmaps(image, check, [&](const DigitalMap& f) {
        const auto kannan = kannan_min_alpha(f, metric);
        const auto chatterjea = chatterjea_min_alpha(f, metric);
        return (kannan && *kannan < check.threshold) || (chatterjea && *chatterjea < check.threshold);
    });
    return check;
}

ExhaustiveCheck check_reich_constancy(const DigitalImage& image, const MetricSpec& metric)
{
    ExhaustiveCheck check;
    check.threshold = constancy_thresholds(image, metric).reich;
    const auto table = distance_table(image, metric);
    // Some a, b, c in (0, T) works iff on each pair the left side is zero or
    // strictly below T times the sum of the three right-hand distances.
    sweep_all_selfmaps(image, check, [&](const DigitalMap& f) {
        for (Index x = 0; x < f.size(); ++x) {
            for (Index y = 0; y < f.size(); ++y) {
                const ExactReal& lhs = (*table)(f(x), f(y));
                if (lhs.is_zero())
                    continue;
                const ExactReal sum = (*table)(x, f(x)) + (*table)(y, f(y)) + (*table)(x, y);
                if (!(lhs < check.threshold * sum))
                    return false;
            }
        }
        return true;
    });
    return check;
}

ExhaustiveCheck check_ulc_constancy(const DigitalImage& image, const MetricSpec& metric)
{
    require_lp(metric);
    ExhaustiveCheck check;
    check.threshold = kOne;
    if (!is_connected(image)) {
        check.precondition_met = false;
        check.precondition_note = "image is not connected";
        return check;
    }
    if (const auto m1 = max_adjacent_distance(image, metric); m1 && kOne < *m1) {
        check.precondition_met = false;
        check.precondition_note = "adjacent points at distance " + m1->to_string() + " > 1";
        return check;
    }
    sweep_all_selfmaps(image, check, [&](const DigitalMap& f) { return ulc_min_alpha(f, metric) < kOne; });
    return check;
}

ExhaustiveCheck check_no_onto_expansive(const DigitalImage& image, const MetricSpec& metric)
{
    ExhaustiveCheck check;
    check.threshold = kOne;
    if (image.size() < 2 || image.size() > 7) {
        check.precondition_met = false;
        check.precondition_note = "requires 2 <= |X| <= 7";
        return check;
    }
    for_each_permutation(image, [&](std::span<const Index> t) {
        ++check.maps_examined;
        ++check.qualifying;
        const DigitalMap f(image, MapTable(t.begin(), t.end()));
        if (kOne < expansive_modulus(f, metric))
            check.counterexamples.push_back(f.table());
        return true;
    });
    return check;
}

// ----------------------------------------------------------------------- Jain

std::string to_string(JainCheck::Outcome outcome)
{
    switch (outcome) {
    case JainCheck::Outcome::HypothesisNotSatisfied:
        return "hypothesis not satisfied";
    case JainCheck::Outcome::BoundNotMet:
        return "alpha bound not met";
    case JainCheck::Outcome::ConclusionHolds:
        return "conclusion holds";
    case JainCheck::Outcome::Counterexample:
        return "counterexample";
    }
    return "?";
}

JainCheck jain_triviality_check(const DigitalMap& s, const DigitalMap& t, const MetricSpec& metric,
                                const ExactReal& alpha)
{
    require_lp(metric);
    require_self_map(s);
    require_self_map(t);
    if (!(s.domain() == t.domain()))
        throw Error("S and T must share their domain");
    require_open_range(alpha, kZero, kOne, "alpha");
    const DigitalImage& image = s.domain();
    const auto table = distance_table(image, metric);
    auto d = [&](Index a, Index b) -> const ExactReal& { return (*table)(a, b); };
    const std::size_t n = image.size();

    JainCheck check;
    bool hypothesis = true;
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            const ExactReal f = max(max(d(x, y), d(x, s(x))), max(max(d(y, t(y)), d(s(x), y)), d(x, t(y))));
            if (f.is_zero()) {
                ++check.zero_f_pairs;
            } else {
                ExactReal bound = kOne / f;
                if (!check.alpha_bound || bound < *check.alpha_bound)
                    check.alpha_bound = std::move(bound);
            }
            if (alpha * f < d(s(x), t(y)))
                hypothesis = false;
        }
    }
    if (!hypothesis)
        return check;

    check.alpha_below_bound = !check.alpha_bound || alpha < *check.alpha_bound;
    std::vector<Index> images(s.table());
    images.insert(images.end(), t.table().begin(), t.table().end());
    ExactReal image_diam;
    for (Index a : images)
        for (Index b : images)
            image_diam = max(image_diam, d(a, b));
    check.diameter_case = image_diam == diameter(image, metric);

    if (!check.alpha_below_bound && !check.diameter_case) {
        check.outcome = JainCheck::Outcome::BoundNotMet;
        return check;
    }
    const bool same_constant = is_constant(s) && is_constant(t) && s(0) == t(0);
    const bool conclusion = same_constant && (!check.diameter_case || n == 1);
    check.outcome = conclusion ? JainCheck::Outcome::ConclusionHolds : JainCheck::Outcome::Counterexample;
    return check;
}

} // namespace digifix
