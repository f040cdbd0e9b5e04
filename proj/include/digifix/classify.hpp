#pragma once

#include "digifix/exact_real.hpp"
#include "digifix/map.hpp"
#include "digifix/metric.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace digifix {

/// A comparison function psi: [0, inf) -> [0, inf).
///
/// Membership in the nondecreasing, iterate-decaying family is enforced by
/// shape: `linear(l)` belongs exactly when 0 < l < 1, `zero()` always belongs,
/// and a tabulated function belongs when its values are nondecreasing and its
/// iterates decay geometrically from every sampled argument (see
/// iterate_decay_holds).
class PsiFunction {
public:
    struct Linear {
        ExactReal slope;
    };
    struct ConstantZero {};
    /// Piecewise linear through (t_k, v_k), t_0 = 0, constant after the last
    /// breakpoint.
    struct Tabulated {
        std::vector<std::pair<Rational, Rational>> breakpoints;
    };

    static PsiFunction linear(ExactReal slope) { return PsiFunction(Linear{std::move(slope)}); }
    static PsiFunction zero() { return PsiFunction(ConstantZero{}); }
    /// Throws Error unless breakpoints start at 0, increase strictly, and have
    /// nonnegative nondecreasing values.
    static PsiFunction tabulated(std::vector<std::pair<Rational, Rational>> breakpoints);

    ExactReal operator()(const ExactReal& t) const;

    /// Shape-level membership (linear slope in (0,1), zero, or tabulated).
    bool in_psi() const;
    /// Checks psi^{k+1}(t) <= a psi^k(t) with a single a < 1 along the first
    /// `steps` iterates of every sample (summable slack v_k = 0).
    bool iterate_decay_holds(std::span<const ExactReal> samples, std::size_t steps = 8) const;

    std::string describe() const;

    const std::variant<Linear, ConstantZero, Tabulated>& variant() const { return variant_; }

private:
    explicit PsiFunction(std::variant<Linear, ConstantZero, Tabulated> v) : variant_(std::move(v)) {}
    std::variant<Linear, ConstantZero, Tabulated> variant_;
};

/// Nonnegative weight on ordered index pairs.
class PairWeight {
public:
    PairWeight(std::size_t n, std::vector<ExactReal> values);
    static PairWeight constant(std::size_t n, const ExactReal& value);
    /// w(x, y) = d(x, y).
    static PairWeight distance(const DigitalImage& image, const MetricSpec& metric);

    std::size_t size() const { return n_; }
    const ExactReal& operator()(Index x, Index y) const { return values_[x * n_ + y]; }

private:
    std::size_t n_;
    std::vector<ExactReal> values_;
};

/// Result of testing a strict inequality family at a fixed multiplier.
enum class StrictVerdict {
    Holds,
    /// holds with <= but equality occurs at some pair
    Boundary,
    Fails,
};

std::string to_string(StrictVerdict v);

/// max over distinct pairs of d(f x, f y) / d(x, y); 0 on a singleton.
/// Works for maps between different images (distances taken in each).
ExactReal contraction_modulus(const DigitalMap& f, const MetricSpec& metric);
/// d(f x, f y) < alpha d(x, y) for all distinct pairs, alpha in (0, 1).
StrictVerdict contraction_at(const DigitalMap& f, const MetricSpec& metric, const ExactReal& alpha);

/// alpha in (0, 1/2); throws Error otherwise.
bool is_kannan(const DigitalMap& f, const MetricSpec& metric, const ExactReal& alpha);
/// Least alpha for which the Kannan inequality holds; nothing when some pair
/// has a positive left side over a zero right side.
std::optional<ExactReal> kannan_min_alpha(const DigitalMap& f, const MetricSpec& metric);
bool is_chatterjea(const DigitalMap& f, const MetricSpec& metric, const ExactReal& alpha);
std::optional<ExactReal> chatterjea_min_alpha(const DigitalMap& f, const MetricSpec& metric);

/// a, b, c >= 0 with a + b + c < 1; throws Error otherwise.
bool is_reich(const DigitalMap& f, const MetricSpec& metric, const ExactReal& a, const ExactReal& b,
              const ExactReal& c);

struct ReichWeights {
    ExactReal a, b, c;
    ExactReal sum() const { return a + b + c; }
};
/// Weights minimizing a + b + c subject to the Reich inequality on every pair
/// (exact vertex enumeration of the three-variable linear program).
ReichWeights reich_min_weights(const DigitalMap& f, const MetricSpec& metric);

/// alpha in (0, 1) for both.
bool is_zamfirescu(const DigitalMap& f, const MetricSpec& metric, const ExactReal& alpha);
bool is_rhoades(const DigitalMap& f, const MetricSpec& metric, const ExactReal& alpha);
ExactReal zamfirescu_min_alpha(const DigitalMap& f, const MetricSpec& metric);
ExactReal rhoades_min_alpha(const DigitalMap& f, const MetricSpec& metric);

/// d(x, y) <= 1 implies d(f x, f y) <= alpha d(x, y); alpha in [0, 1).
bool is_uniformly_locally_contractive(const DigitalMap& f, const MetricSpec& metric, const ExactReal& alpha);
/// Least such alpha (0 when no distinct pair lies within distance 1).
ExactReal ulc_min_alpha(const DigitalMap& f, const MetricSpec& metric);

/// w(x, y) d(T x, T y) <= psi(d(x, y)) for all pairs.
bool is_alpha_psi_contractive(const DigitalMap& f, const MetricSpec& metric, const PairWeight& w,
                              const PsiFunction& psi);
/// w(x, y) >= 1 implies w(T x, T y) >= 1.
bool is_admissible(const DigitalMap& f, const PairWeight& w);

/// psi(d(T x, T y)) >= w(x, y) psi(d(x, y)) + phi(d(x, y)) for all pairs.
/// Throws Error if psi or phi is outside the family.
bool is_beta_psi_phi_expansive(const DigitalMap& f, const MetricSpec& metric, const PairWeight& w,
                               const PsiFunction& psi, const PsiFunction& phi);

/// min over distinct pairs of d(f x, f y) / d(x, y). Works for maps between
/// different images. Throws Error if the domain has fewer than two points.
ExactReal expansive_modulus(const DigitalMap& f, const MetricSpec& metric);
/// d(f x, f y) >= k d(x, y) for all pairs; k > 1.
bool is_expansive(const DigitalMap& f, const MetricSpec& metric, const ExactReal& k);

enum class StrictnessVariant {
    /// eps < d(x, y) < eps + delta implies d(T x, T y) < eps
    Strict,
    /// eps <= d(x, y) < eps + delta implies d(T x, T y) < eps
    Weak,
};

/// Weakly uniformly strict contraction. On a finite space the strict variant
/// holds for every map: for each eps, delta is chosen below the gap to the
/// next realized distance, so the hypothesis never fires. The weak variant
/// reduces to d(T x, T y) < d(x, y) for all distinct pairs.
bool is_weakly_uniformly_strict(const DigitalMap& f, const MetricSpec& metric, StrictnessVariant variant);

/// f is g-intimate, in the reduced form valid for discrete metrics: for every
/// t = f(x) = g(x), d(g t, t) <= d(f t, t).
bool is_intimate(const DigitalMap& f, const DigitalMap& g, const MetricSpec& metric);

/// Verdicts of one self-map against every family, with the tight moduli.
struct ClassificationReport {
    std::string metric;
    bool continuous = false;
    bool constant = false;
    bool onto = false;
    std::vector<Index> fixed;
    std::vector<Index> approximate_fixed;

    ExactReal contraction_modulus;
    bool contraction = false;
    std::optional<ExactReal> kannan_min_alpha;
    bool kannan = false;
    std::optional<ExactReal> chatterjea_min_alpha;
    bool chatterjea = false;
    ReichWeights reich_weights;
    bool reich = false;
    ExactReal zamfirescu_min_alpha;
    bool zamfirescu = false;
    ExactReal rhoades_min_alpha;
    bool rhoades = false;
    ExactReal ulc_min_alpha;
    bool uniformly_locally_contractive = false;
    /// w = 1, psi(t) = l t for some l in (0, 1)
    bool alpha_psi_linear = false;
    /// psi = phi = 0, w = 0
    bool beta_psi_phi_degenerate = false;
    std::optional<ExactReal> expansive_modulus;
    bool expansive = false;
    bool weakly_uniformly_strict = false;
    bool weakly_uniformly_strict_weak = false;

    /// Verdicts at a caller-supplied multiplier, when one was given.
    struct AtAlpha {
        ExactReal alpha;
        StrictVerdict contraction = StrictVerdict::Fails;
        std::optional<bool> kannan;
        std::optional<bool> chatterjea;
        bool zamfirescu = false;
        bool rhoades = false;
        bool uniformly_locally_contractive = false;
    };
    std::optional<AtAlpha> at_alpha;
};

/// Requires a self-map and an l_p or path metric with exact evaluation.
ClassificationReport classify(const DigitalMap& f, const MetricSpec& metric,
                              const std::optional<ExactReal>& alpha = std::nullopt);

// Exhaustive theorem checks. Each enumerates the relevant maps and records any
// map that meets the hypothesis without the conclusion.

struct ExhaustiveCheck {
    bool precondition_met = true;
    std::string precondition_note;
    ExactReal threshold;
    std::size_t maps_examined = 0;
    /// maps meeting the hypothesis
    std::size_t qualifying = 0;
    std::vector<MapTable> counterexamples;
    /// non-constant maps sitting exactly on the threshold (not counterexamples)
    std::vector<MapTable> boundary;

    bool holds() const { return precondition_met && counterexamples.empty(); }
};

/// Every self-map with contraction modulus below min(1, M2 / M1) is constant,
/// where M2 is the least distance between distinct points and M1 the largest
/// distance between adjacent points. Requires a connected image and an l_p
/// metric.
ExhaustiveCheck check_contraction_implies_constant(const DigitalImage& image, const MetricSpec& metric);

struct ConstancyThresholds {
    ExactReal kannan_chatterjea; // 1 / (2 diam)
    ExactReal reich;             // 1 / (3 diam)
};
/// Throws Error on a singleton.
ConstancyThresholds constancy_thresholds(const DigitalImage& image, const MetricSpec& metric);
/// Every self-map that is Kannan or Chatterjea for some alpha below
/// 1 / (2 diam) is constant.
ExhaustiveCheck check_kannan_chatterjea_constancy(const DigitalImage& image, const MetricSpec& metric);
/// Every self-map that is Reich for some a, b, c in (0, 1 / (3 diam)) is
/// constant.
ExhaustiveCheck check_reich_constancy(const DigitalImage& image, const MetricSpec& metric);
/// Every uniformly locally contractive self-map (some alpha < 1) is constant.
/// Precondition probe: connected, and adjacent points lie within distance 1.
ExhaustiveCheck check_ulc_constancy(const DigitalImage& image, const MetricSpec& metric);
/// No onto self-map has expansive modulus above 1. Requires 2 <= |X| <= 7.
ExhaustiveCheck check_no_onto_expansive(const DigitalImage& image, const MetricSpec& metric);

struct JainCheck {
    enum class Outcome {
        /// d(S x, T y) <= alpha F(x, y) fails for some pair
        HypothesisNotSatisfied,
        /// hypothesis holds but alpha is not below min 1/F and the diameter
        /// condition does not apply, so nothing is asserted
        BoundNotMet,
        /// S and T are the same constant map (and X is a singleton in the
        /// diameter case)
        ConclusionHolds,
        Counterexample,
    };
    Outcome outcome = Outcome::HypothesisNotSatisfied;
    /// min over pairs with F > 0 of 1 / F; nothing if F vanishes everywhere
    std::optional<ExactReal> alpha_bound;
    /// pairs where F(x, y) = 0 (bound treated as +inf there)
    std::size_t zero_f_pairs = 0;
    bool alpha_below_bound = false;
    bool diameter_case = false;
};

std::string to_string(JainCheck::Outcome outcome);

/// Common-fixed-point hypothesis with A = B = identity:
/// F(x, y) = max{d(x,y), d(x,Sx), d(y,Ty), d(Sx,y), d(x,Ty)}. alpha in (0, 1).
JainCheck jain_triviality_check(const DigitalMap& s, const DigitalMap& t, const MetricSpec& metric,
                                const ExactReal& alpha);

} // namespace digifix
