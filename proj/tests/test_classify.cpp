#include "digifix/classify.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace digifix;

namespace {

const ExactReal kHalf = ExactReal::ratio(1, 2);
const ExactReal kAlmost = ExactReal::ratio(99, 100);

const MetricSpec kMetrics[] = {MetricSpec::l1(), MetricSpec::l2(), MetricSpec::linf()};

DigitalMap edge_swap()
{
    return DigitalMap(digital_interval(0, 1), {1, 0});
}

// Smallest a + b + c on a grid of step 1/8 satisfying every Reich row, with
// floating-point distances.
double reich_grid_min(const DigitalMap& f, const MetricSpec& m)
{
    const auto& x = f.domain();
    auto d = [&](Index p, Index q) { return lp_distance(x.point(p), x.point(q), m.p); };
    double best = 1e9;
    for (int a = 0; a <= 24; ++a)
        for (int b = 0; b <= 24; ++b)
            for (int c = 0; c <= 24; ++c) {
                const double wa = a / 8.0, wb = b / 8.0, wc = c / 8.0;
                if (wa + wb + wc >= best)
                    continue;
                bool ok = true;
                for (Index p = 0; p < f.size() && ok; ++p)
                    for (Index q = 0; q < f.size() && ok; ++q)
                        ok = d(f(p), f(q)) <= wa * d(p, f(p)) + wb * d(q, f(q)) + wc * d(p, q) + 1e-12;
                if (ok)
                    best = wa + wb + wc;
            }
    return best;
}

} // namespace

TEST_SUITE("classify") {

TEST_CASE("the example-4-2 map")
{
    const DigitalMap f = example_4_2_map();
    const MetricSpec l1 = MetricSpec::l1();
    const ExactReal a = ExactReal::ratio(45, 100);
    CHECK(contraction_modulus(f, l1) == ExactReal::ratio(2, 5));
    CHECK(contraction_at(f, l1, a) == StrictVerdict::Holds);
    CHECK(contraction_at(f, l1, ExactReal::ratio(2, 5)) == StrictVerdict::Boundary);
    CHECK(contraction_at(f, l1, ExactReal::ratio(1, 5)) == StrictVerdict::Fails);
    CHECK(is_kannan(f, l1, a));
    CHECK(is_chatterjea(f, l1, a));
    CHECK(is_zamfirescu(f, l1, a));
    CHECK(is_rhoades(f, l1, a));
    CHECK(is_uniformly_locally_contractive(f, l1, a));
    CHECK(is_reich(f, l1, 0, 0, a));
    CHECK(is_alpha_psi_contractive(f, l1, PairWeight::constant(3, 1), PsiFunction::linear(a)));
    CHECK(is_beta_psi_phi_expansive(f, l1, PairWeight::constant(3, 1), PsiFunction::zero(), PsiFunction::zero()));
    CHECK(is_weakly_uniformly_strict(f, l1, StrictnessVariant::Strict));
    CHECK(is_weakly_uniformly_strict(f, l1, StrictnessVariant::Weak));

    const ClassificationReport r = classify(f, l1, a);
    CHECK_FALSE(r.continuous);
    CHECK(r.contraction);
    CHECK(r.kannan);
    CHECK(r.chatterjea);
    CHECK(r.reich);
    CHECK(r.zamfirescu);
    CHECK(r.rhoades);
    CHECK(r.uniformly_locally_contractive);
    CHECK(r.alpha_psi_linear);
    CHECK(r.beta_psi_phi_degenerate);
    CHECK(r.weakly_uniformly_strict);
    CHECK(r.fixed == std::vector<Index>{0});
    REQUIRE(r.at_alpha);
    CHECK(r.at_alpha->contraction == StrictVerdict::Holds);
    CHECK(r.at_alpha->kannan == std::optional<bool>(true));
    CHECK(r.at_alpha->chatterjea == std::optional<bool>(true));
    CHECK(r.reich_weights.sum() == ExactReal::ratio(2, 5));
}

TEST_CASE("identity and constant maps")
{
    const DigitalImage x = digital_interval(0, 2);
    const DigitalMap id = DigitalMap::identity(x);
    const DigitalMap k = DigitalMap::constant(x, 1);
    for (const MetricSpec& m : kMetrics) {
        CHECK(contraction_modulus(id, m) == ExactReal(1));
        CHECK(contraction_modulus(k, m).is_zero());
        CHECK_FALSE(kannan_min_alpha(id, m));
        CHECK_FALSE(is_kannan(id, m, ExactReal::ratio(1, 4)));
        CHECK_FALSE(is_chatterjea(id, m, ExactReal::ratio(1, 4)));
        CHECK(is_chatterjea(k, m, ExactReal::ratio(1, 4)));
        CHECK(is_kannan(k, m, ExactReal::ratio(1, 4)));
        CHECK_FALSE(is_reich(id, m, ExactReal::ratio(1, 4), ExactReal::ratio(1, 4), ExactReal::ratio(1, 4)));
        CHECK(is_reich(k, m, 0, 0, 0));
        CHECK_FALSE(is_zamfirescu(id, m, kAlmost));
        CHECK_FALSE(is_rhoades(id, m, kAlmost));
        CHECK(is_zamfirescu(k, m, ExactReal::ratio(1, 100)));
        CHECK_FALSE(is_uniformly_locally_contractive(id, m, kAlmost));
        CHECK(expansive_modulus(id, m) == ExactReal(1));
        CHECK(expansive_modulus(k, m).is_zero());
        CHECK_FALSE(is_expansive(id, m, ExactReal(2)));
        CHECK_FALSE(is_weakly_uniformly_strict(id, m, StrictnessVariant::Weak));
        CHECK(is_weakly_uniformly_strict(id, m, StrictnessVariant::Strict));
        CHECK_FALSE(is_alpha_psi_contractive(id, m, PairWeight::constant(3, 1), PsiFunction::zero()));
        CHECK(is_alpha_psi_contractive(id, m, PairWeight::constant(3, 0), PsiFunction::zero()));
        CHECK(is_beta_psi_phi_expansive(id, m, PairWeight::constant(3, 1), PsiFunction::linear(kHalf),
                                        PsiFunction::zero()));
    }
}

TEST_CASE("edge swap: Kannan least multiplier is exactly one half")
{
    const DigitalMap f = edge_swap();
    CHECK(kannan_min_alpha(f, MetricSpec::l1()) == std::optional<ExactReal>(kHalf));
    CHECK_FALSE(is_kannan(f, MetricSpec::l1(), ExactReal::ratio(49, 100)));
    CHECK_FALSE(classify(f, MetricSpec::l1()).kannan);
}

TEST_CASE("multiplier ranges are enforced")
{
    const DigitalMap f = edge_swap();
    const MetricSpec m = MetricSpec::l1();
    CHECK_THROWS_AS(is_kannan(f, m, kHalf), Error);
    CHECK_THROWS_AS(is_kannan(f, m, 0), Error);
    CHECK_THROWS_AS(is_chatterjea(f, m, ExactReal(1)), Error);
    CHECK_THROWS_AS(is_zamfirescu(f, m, ExactReal(1)), Error);
    CHECK_THROWS_AS(is_reich(f, m, kHalf, kHalf, 0), Error);
    CHECK_THROWS_AS(is_reich(f, m, ExactReal(-1), 0, 0), Error);
    CHECK_THROWS_AS(is_uniformly_locally_contractive(f, m, ExactReal(1)), Error);
    CHECK_THROWS_AS(is_expansive(f, m, ExactReal(1)), Error);
    CHECK_THROWS_AS(expansive_modulus(DigitalMap::identity(singleton()), m), Error);
    CHECK_THROWS_AS(is_beta_psi_phi_expansive(f, m, PairWeight::constant(2, 1), PsiFunction::linear(1),
                                              PsiFunction::zero()),
                    Error);
    CHECK_THROWS_AS(classify(f, MetricSpec::lp(3)), Error);
    CHECK_THROWS_AS(PsiFunction::tabulated({{1, 0}}), Error);
    CHECK_THROWS_AS(PsiFunction::tabulated({{0, 2}, {1, 1}}), Error);
}

TEST_CASE("psi functions")
{
    CHECK(PsiFunction::linear(kHalf).in_psi());
    CHECK_FALSE(PsiFunction::linear(ExactReal(1)).in_psi());
    CHECK(PsiFunction::zero().in_psi());
    const PsiFunction t = PsiFunction::tabulated({{0, 0}, {2, 1}, {4, 1}});
    CHECK(t(ExactReal(1)) == kHalf);
    CHECK(t(ExactReal(9)) == ExactReal(1));
    const ExactReal samples[] = {ExactReal(1), ExactReal(2), ExactReal(3)};
    CHECK(t.iterate_decay_holds(samples));
    CHECK(PsiFunction::linear(kHalf).iterate_decay_holds(samples));
    // psi(t) = t on [0, 1]: iterates never decay
    CHECK_FALSE(PsiFunction::tabulated({{0, 0}, {1, 1}}).iterate_decay_holds(samples));
}

TEST_CASE("admissibility")
{
    const DigitalImage x = digital_interval(0, 2);
    std::vector<ExactReal> w(9, ExactReal(0));
    w[0 * 3 + 1] = ExactReal(1);
    const PairWeight weight(3, w);
    CHECK_FALSE(is_admissible(DigitalMap(x, {2, 2, 2}), weight));
    CHECK(is_admissible(DigitalMap(x, {0, 1, 1}), weight));
    CHECK(is_admissible(DigitalMap(x, {2, 2, 2}), PairWeight::constant(3, 0)));
}

TEST_CASE("intimacy in the reduced form")
{
    const DigitalImage x = digital_interval(0, 2);
    const MetricSpec m = MetricSpec::l1();
    const DigitalMap f = DigitalMap::constant(x, 0);
    CHECK(is_intimate(f, f, m));
    CHECK(is_intimate(DigitalMap(x, {1, 1, 1}), DigitalMap(x, {0, 0, 0}), m));
    CHECK_FALSE(is_intimate(f, DigitalMap(x, {1, 0, 0}), m));
}

TEST_CASE("expansive doubling on a prefix")
{
    const DigitalImage domain = build_image({{1}, {2}, {3}, {4}, {5}}, AdjacencySpec::cu(1));
    const DigitalImage codomain = build_image({{2}, {4}, {6}, {8}, {10}}, AdjacencySpec::cu(1));
    const DigitalMap f(domain, codomain, {0, 1, 2, 3, 4});
    CHECK(expansive_modulus(f, MetricSpec::l1()) == ExactReal(2));
    CHECK(is_expansive(f, MetricSpec::l1(), ExactReal(2)));
    CHECK_FALSE(is_expansive(f, MetricSpec::l1(), ExactReal::ratio(21, 10)));
}

TEST_CASE("property: tight moduli sit exactly at each predicate's threshold")
{
    auto g = test::rng(40);
    const DigitalImage images[] = {digital_interval(0, 3), digital_picture({{0, 1}, {0, 1}}), example_4_2_image()};
    for (int trial = 0; trial < 150; ++trial) {
        const DigitalImage& x = images[trial % 3];
        const MetricSpec& m = kMetrics[(trial / 3) % 3];
        const DigitalMap f(x, test::random_table(g, x.size()));
        CAPTURE(trial);

        const ExactReal mu = contraction_modulus(f, m);
        if (mu.sign() > 0 && mu < ExactReal(1)) {
            CHECK(contraction_at(f, m, mu) == StrictVerdict::Boundary);
            CHECK(contraction_at(f, m, mu * kAlmost) == StrictVerdict::Fails);
        }
        if (mu.is_zero())
            CHECK(is_constant(f));

        for (auto [least, pred] :
             {std::pair{kannan_min_alpha(f, m), &is_kannan}, std::pair{chatterjea_min_alpha(f, m), &is_chatterjea}}) {
            if (!least) {
                CHECK_FALSE(pred(f, m, ExactReal::ratio(49, 100)));
            } else if (*least < kHalf) {
                if (least->sign() > 0) {
                    CHECK(pred(f, m, *least));
                    CHECK_FALSE(pred(f, m, *least * kAlmost));
                }
            } else {
                CHECK_FALSE(pred(f, m, ExactReal::ratio(49, 100)));
            }
        }
        for (auto [least, pred] : {std::pair{zamfirescu_min_alpha(f, m), &is_zamfirescu},
                                   std::pair{rhoades_min_alpha(f, m), &is_rhoades},
                                   std::pair{ulc_min_alpha(f, m), &is_uniformly_locally_contractive}}) {
            if (least.sign() > 0 && least < ExactReal(1)) {
                CHECK(pred(f, m, least));
                CHECK_FALSE(pred(f, m, least * kAlmost));
            } else if (!(least < ExactReal(1))) {
                CHECK_FALSE(pred(f, m, kAlmost));
            }
        }

        const ClassificationReport r = classify(f, m);
        CHECK(r.contraction == (r.contraction_modulus < ExactReal(1)));
        CHECK(r.kannan == (r.kannan_min_alpha && *r.kannan_min_alpha < kHalf));
        CHECK(r.reich == (r.reich_weights.sum() < ExactReal(1)));
        CHECK(r.beta_psi_phi_degenerate);
        CHECK(r.weakly_uniformly_strict);
        CHECK(r.weakly_uniformly_strict_weak == r.contraction);
        // a contraction is Reich with a = b = 0, and Zamfirescu and Rhoades
        if (r.contraction) {
            CHECK(r.reich);
            CHECK(r.zamfirescu);
            CHECK(r.rhoades);
            CHECK(r.uniformly_locally_contractive);
            CHECK(r.alpha_psi_linear);
        }
    }
}

TEST_CASE("property: Reich least weights against a grid search")
{
    auto g = test::rng(41);
    const DigitalImage x = digital_interval(0, 3);
    for (int trial = 0; trial < 25; ++trial) {
        const MetricSpec& m = kMetrics[trial % 3];
        const DigitalMap f(x, test::random_table(g, x.size()));
        const ReichWeights w = reich_min_weights(f, m);
        CHECK(w.a.sign() >= 0);
        CHECK(w.b.sign() >= 0);
        CHECK(w.c.sign() >= 0);
        const auto d = distance_table(x, m);
        for (Index p = 0; p < x.size(); ++p)
            for (Index q = 0; q < x.size(); ++q)
                CHECK((*d)(f(p), f(q)) <= w.a * (*d)(p, f(p)) + w.b * (*d)(q, f(q)) + w.c * (*d)(p, q));
        const double grid = reich_grid_min(f, m);
        CAPTURE(f.table());
        CHECK(w.sum().to_double() <= grid + 1e-9);
        CHECK(w.sum().to_double() >= grid - 3.0 / 8.0 - 1e-9);
        if (w.sum() < ExactReal(1) && w.sum().sign() > 0) {
            const ExactReal slack = (ExactReal(1) - w.sum()) / ExactReal(3);
            CHECK(is_reich(f, m, w.a, w.b, w.c + slack));
        }
    }
}

TEST_CASE("weak strictness is the pairwise strict decrease")
{
    auto g = test::rng(42);
    const DigitalImage x = digital_picture({{0, 1}, {0, 1}});
    for (int trial = 0; trial < 100; ++trial) {
        const DigitalMap f(x, test::random_table(g, x.size()));
        const auto d = distance_table(x, MetricSpec::l2());
        bool oracle = true;
        for (Index p = 0; p < x.size(); ++p)
            for (Index q = p + 1; q < x.size(); ++q)
                oracle = oracle && (*d)(f(p), f(q)) < (*d)(p, q);
        CHECK(is_weakly_uniformly_strict(f, MetricSpec::l2(), StrictnessVariant::Weak) == oracle);
        CHECK(is_weakly_uniformly_strict(f, MetricSpec::l2(), StrictnessVariant::Strict));
    }
}

TEST_CASE("constancy theorems on the interval and the 2x2 picture")
{
    const DigitalImage interval = digital_interval(0, 3);
    const DigitalImage square = digital_picture({{0, 1}, {0, 1}});
    for (auto [x, m] : {std::pair{interval, MetricSpec::l1()}, std::pair{square, MetricSpec::linf()}}) {
        const ExhaustiveCheck c = check_contraction_implies_constant(x, m);
        CHECK(c.holds());
        CHECK(c.maps_examined == 256);
        CHECK(c.qualifying == 4);
        CHECK(check_kannan_chatterjea_constancy(x, m).holds());
        CHECK(check_reich_constancy(x, m).holds());
        const ExhaustiveCheck u = check_ulc_constancy(x, m);
        CHECK(u.holds());
        CHECK(u.qualifying == 4);
    }
    CHECK(check_contraction_implies_constant(singleton(), MetricSpec::l1()).holds());
    const auto apart = build_image({{0}, {3}}, AdjacencySpec::cu(1));
    CHECK_FALSE(check_contraction_implies_constant(apart, MetricSpec::l1()).precondition_met);
    CHECK_FALSE(check_ulc_constancy(digital_picture({{0, 1}, {0, 1}}), MetricSpec::l1()).precondition_met);
}

TEST_CASE("example-4-2 image: thresholds and the boundary map")
{
    const DigitalImage e = example_4_2_image();
    const ConstancyThresholds t = constancy_thresholds(e, MetricSpec::l1());
    CHECK(t.kannan_chatterjea == ExactReal::ratio(1, 10));
    CHECK(t.reich == ExactReal::ratio(1, 15));
    const auto i1 = constancy_thresholds(digital_interval(0, 1), MetricSpec::l1());
    CHECK(i1.kannan_chatterjea == kHalf);
    CHECK(i1.reich == ExactReal::ratio(1, 3));
    CHECK_THROWS_AS(constancy_thresholds(singleton(), MetricSpec::l1()), Error);

    const ExhaustiveCheck c = check_contraction_implies_constant(e, MetricSpec::l1());
    CHECK(c.threshold == ExactReal::ratio(2, 5));
    CHECK(c.holds());
    bool found = false;
    for (const auto& b : c.boundary)
        found = found || b == example_4_2_map().table();
    CHECK(found);
}

TEST_CASE("no onto map expands")
{
    const ExhaustiveCheck c = check_no_onto_expansive(digital_interval(0, 2), MetricSpec::l1());
    CHECK(c.holds());
    CHECK(c.maps_examined == 6);
    CHECK(check_no_onto_expansive(example_4_2_image(), MetricSpec::l2()).holds());
    CHECK_FALSE(check_no_onto_expansive(singleton(), MetricSpec::l1()).precondition_met);
}

TEST_CASE("common fixed point triviality")
{
    const DigitalImage edge = digital_interval(0, 1);
    const MetricSpec m = MetricSpec::l1();
    const DigitalMap k = DigitalMap::constant(edge, 0);
    CHECK(jain_triviality_check(k, k, m, kHalf).outcome == JainCheck::Outcome::ConclusionHolds);

    const DigitalImage e = example_4_2_image();
    const DigitalMap ke = DigitalMap::constant(e, 2);
    const JainCheck je = jain_triviality_check(ke, ke, m, kHalf);
    CHECK(je.outcome != JainCheck::Outcome::HypothesisNotSatisfied);
    CHECK(je.outcome != JainCheck::Outcome::Counterexample);

    const DigitalMap id = DigitalMap::identity(edge);
    const JainCheck ji = jain_triviality_check(id, id, m, ExactReal::ratio(1, 2));
    CHECK(ji.outcome == JainCheck::Outcome::HypothesisNotSatisfied);
    CHECK(ji.alpha_bound == std::optional<ExactReal>(ExactReal(1)));
}

TEST_CASE("common fixed point triviality: the diameter case admits a non-constant pair")
{
    // S = 1 and T(y) = 2 - y on [0, 2]_Z: every pair satisfies the inequality,
    // S(X) u T(X) = X has the full diameter, and T is not constant.
    const DigitalImage x = digital_interval(0, 2);
    const DigitalMap s = DigitalMap::constant(x, 1);
    const DigitalMap t(x, {2, 1, 0});
    for (const ExactReal& alpha : {kHalf, ExactReal::ratio(9, 10)}) {
        const JainCheck j = jain_triviality_check(s, t, MetricSpec::l1(), alpha);
        CHECK(j.diameter_case);
        CHECK(j.outcome == JainCheck::Outcome::Counterexample);
    }
}

}
