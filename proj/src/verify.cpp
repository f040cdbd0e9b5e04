#include "digifix/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <thread>

namespace digifix {

namespace {

ExactReal q(std::int64_t num, std::int64_t den = 1)
{
    return ExactReal::ratio(num, den);
}

const std::vector<MetricSpec>& lp_metrics()
{
    static const std::vector<MetricSpec> metrics{MetricSpec::l1(), MetricSpec::l2(), MetricSpec::linf()};
    return metrics;
}

Json tables_json(const std::vector<MapTable>& tables, std::size_t limit = 5)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < tables.size() && i < limit; ++i)
        out.push_back(tables[i]);
    return out;
}

Json check_json(const ExhaustiveCheck& c)
{
    Json j{{"threshold", exact_to_json(c.threshold)},
           {"maps_examined", c.maps_examined},
           {"qualifying", c.qualifying},
           {"counterexamples", c.counterexamples.size()}};
    if (!c.precondition_met)
        j["precondition"] = c.precondition_note;
    if (!c.counterexamples.empty())
        j["first_counterexamples"] = tables_json(c.counterexamples);
    if (!c.boundary.empty())
        j["boundary"] = tables_json(c.boundary);
    return j;
}

bool fixed_point_free(const VerifyOptions& o, const DigitalMap& f)
{
    return o.primitives.fixed_points(f).empty();
}

// ------------------------------------------------------------------ claims

ClaimOutcome noncontinuous_contraction(const VerifyOptions& o)
{
    const DigitalMap f = example_4_2_map();
    const MetricSpec l1 = MetricSpec::l1();
    const auto d = distance_table(f.domain(), l1);
    const ExactReal alpha = q(45, 100);

    const std::vector<ExactReal> distances{(*d)(0, 1), (*d)(0, 2), (*d)(1, 2)};
    const std::vector<ExactReal> image_distances{(*d)(f(0), f(1)), (*d)(f(0), f(2)), (*d)(f(1), f(2))};
    const ExactReal modulus = contraction_modulus(f, l1);
    const std::size_t n = f.size();

    std::map<std::string, bool> verdicts;
    verdicts["not continuous"] = !o.primitives.continuous(f);
    verdicts["distances 2, 5, 5"] = distances == std::vector<ExactReal>{q(2), q(5), q(5)};
    verdicts["image distances 0, 2, 2"] = image_distances == std::vector<ExactReal>{q(0), q(2), q(2)};
    verdicts["contraction modulus 2/5"] = modulus == q(2, 5);
    verdicts["digital contraction"] = contraction_at(f, l1, alpha) == StrictVerdict::Holds;
    verdicts["kannan"] = is_kannan(f, l1, alpha);
    verdicts["chatterjea"] = is_chatterjea(f, l1, alpha);
    verdicts["zamfirescu"] = is_zamfirescu(f, l1, alpha);
    verdicts["rhoades"] = is_rhoades(f, l1, alpha);
    verdicts["uniformly locally contractive"] = is_uniformly_locally_contractive(f, l1, alpha);
    verdicts["alpha-psi contractive"] =
        is_alpha_psi_contractive(f, l1, PairWeight::constant(n, q(1)), PsiFunction::linear(alpha));
    verdicts["beta-psi-phi expansive"] =
        is_beta_psi_phi_expansive(f, l1, PairWeight::constant(n, q(1)), PsiFunction::zero(), PsiFunction::zero());
    verdicts["weakly uniformly strict"] = is_weakly_uniformly_strict(f, l1, StrictnessVariant::Strict);

    bool pass = true;
    Json witness;
    for (const auto& [name, ok] : verdicts) {
        witness[name] = ok;
        pass = pass && ok;
    }
    witness["modulus"] = exact_to_json(modulus);
    return {pass, witness};
}

ClaimOutcome fpp_singleton_only(const VerifyOptions& o)
{
    bool pass = true;
    Json witness = Json::object();
    for (const auto& [name, image] : fixture_images()) {
        if (!is_connected(image) || image.size() > 6)
            continue;
        const PropertyVerdict v = has_fpp(image);
        if (image.size() == 1) {
            // the only self-map is the identity, which must fix the point
            const bool fixed = !o.primitives.fixed_points(DigitalMap::identity(image)).empty();
            witness[name] = {{"fpp", v.holds}, {"identity_fixed", fixed}};
            pass = pass && v.holds && fixed;
            continue;
        }
        const bool valid = !v.holds && v.witness && o.primitives.continuous(*v.witness) && fixed_point_free(o, *v.witness);
        const DigitalMap g = fixed_point_free_map(image, 0, image.neighbors(0).front());
        const bool construction = o.primitives.continuous(g) && fixed_point_free(o, g);
        witness[name] = {{"fpp", v.holds},
                         {"witness", v.witness ? Json(v.witness->table()) : Json(nullptr)},
                         {"construction", g.table()}};
        pass = pass && valid && construction;
    }
    return {pass, witness};
}

ClaimOutcome afpp_pictures_and_cycles(const VerifyOptions& o)
{
    bool pass = true;
    Json witness = Json::object();
    const std::vector<std::pair<std::string, DigitalImage>> pictures{
        {"picture-2x2", digital_picture({{0, 1}, {0, 1}})}, {"picture-3x2", digital_picture({{0, 2}, {0, 1}})}};
    for (const auto& [name, image] : pictures) {
        const PropertyVerdict v = has_afpp(image);
        witness[name] = {{"afpp", v.holds}};
        pass = pass && v.holds;
    }
    for (std::size_t n : {4, 6, 8}) {
        const DigitalImage image = simple_closed_curve(n);
        const PropertyVerdict v = has_afpp(image);
        const DigitalMap shift = cyclic_shift(image, 2);
        const bool shift_ok = o.primitives.continuous(shift) && approximate_fixed_points(shift).empty();
        const bool found_ok = !v.holds && v.witness && o.primitives.continuous(*v.witness) &&
                              approximate_fixed_points(*v.witness).empty();
        witness["scc-" + std::to_string(n)] = {
            {"afpp", v.holds}, {"witness", v.witness ? Json(v.witness->table()) : Json(nullptr)}, {"shift_by_2", shift_ok}};
        pass = pass && found_ok && shift_ok;
    }
    return {pass, witness};
}

std::vector<std::pair<std::string, std::pair<DigitalImage, MetricSpec>>> constancy_cases()
{
    return {{"interval-0-3/l1", {digital_interval(0, 3), MetricSpec::l1()}},
            {"picture-2x2/linf", {digital_picture({{0, 1}, {0, 1}}), MetricSpec::linf()}}};
}

std::size_t power(std::size_t base, std::size_t exp)
{
    std::size_t r = 1;
    while (exp--)
        r *= base;
    return r;
}

template <typename Check>
ClaimOutcome constancy_claim(Check check)
{
    bool pass = true;
    Json witness = Json::object();
    for (const auto& [name, c] : constancy_cases()) {
        const ExhaustiveCheck result = check(c.first, c.second);
        witness[name] = check_json(result);
        pass = pass && result.holds() && result.maps_examined == power(c.first.size(), c.first.size());
    }
    return {pass, witness};
}

ClaimOutcome constancy_contraction(const VerifyOptions&)
{
    auto outcome = constancy_claim(check_contraction_implies_constant);
    // the boundary map of the 5-dimensional fixture
    const DigitalMap f = example_4_2_map();
    const ExhaustiveCheck c = check_contraction_implies_constant(f.domain(), MetricSpec::l1());
    const bool on_boundary = std::find(c.boundary.begin(), c.boundary.end(), f.table()) != c.boundary.end();
    outcome.witness["example-4-2/l1"] = check_json(c);
    outcome.pass = outcome.pass && c.holds() && c.threshold == q(2, 5) && on_boundary;
    return outcome;
}

ClaimOutcome constancy_kannan_chatterjea(const VerifyOptions&)
{
    auto outcome = constancy_claim(check_kannan_chatterjea_constancy);
    const auto t = constancy_thresholds(example_4_2_image(), MetricSpec::l1());
    outcome.witness["example-4-2/l1 thresholds"] = {{"kannan_chatterjea", exact_to_json(t.kannan_chatterjea)},
                                                    {"reich", exact_to_json(t.reich)}};
    outcome.pass = outcome.pass && t.kannan_chatterjea == q(1, 10) && t.reich == q(1, 15);
    return outcome;
}

ClaimOutcome constancy_reich(const VerifyOptions&)
{
    return constancy_claim(check_reich_constancy);
}

ClaimOutcome constancy_ulc(const VerifyOptions&)
{
    return constancy_claim(check_ulc_constancy);
}

ClaimOutcome no_onto_expansive(const VerifyOptions&)
{
    bool pass = true;
    Json witness = Json::object();
    for (const auto& [name, image] : fixture_images()) {
        if (image.size() < 2 || image.size() > 5)
            continue;
        for (const auto& metric : lp_metrics()) {
            const ExhaustiveCheck c = check_no_onto_expansive(image, metric);
            witness[name + "/" + metric.name()] = {{"onto_maps", c.maps_examined},
                                                   {"counterexamples", c.counterexamples.size()}};
            pass = pass && c.holds();
        }
    }
    return {pass, witness};
}

ClaimOutcome antipodal_punctured_square(const VerifyOptions& o)
{
    bool pass = true;
    Json witness = Json::object();
    for (unsigned u : {1u, 2u}) {
        const DigitalMap f = antipodal_map(punctured_square(u));
        const bool continuous = o.primitives.continuous(f);
        const auto fixed = o.primitives.fixed_points(f);
        witness["c" + std::to_string(u)] = {{"continuous", continuous}, {"fixed_points", fixed}};
        pass = pass && continuous && fixed.empty();
    }
    return {pass, witness};
}

ClaimOutcome mf_xf_anchors(const VerifyOptions& o)
{
    bool pass = true;
    Json witness = Json::object();

    for (const auto& [name, image] : std::vector<std::pair<std::string, DigitalImage>>{
             {"interval-0-1", digital_interval(0, 1)}, {"picture-2x2", digital_picture({{0, 1}, {0, 1}})}}) {
        const DigitalMap c = DigitalMap::constant(image, 0);
        const auto low = mf(c, o.budget);
        const HomotopyTrace trace = constant_to_fpf_homotopy(image, 0, image.neighbors(0).front());
        const bool trace_ok = bool(validate_homotopy(trace)) && fixed_point_free(o, trace.back());
        witness[name] = {{"mf_constant", low.value}, {"trace", trace_to_json(trace)}};
        pass = pass && low.value == 0 && fixed_point_free(o, low.witness) && trace_ok;
    }

    const DigitalImage one = singleton();
    const auto s = summarize_class(DigitalMap::identity(one), o.budget);
    witness["singleton"] = {{"mf", s.mf}, {"xf", s.xf}};
    pass = pass && s.mf == 1 && s.xf == 1;

    Json xf_id = Json::object();
    for (const auto& [name, image] : fixture_images()) {
        const auto high = xf(DigitalMap::identity(image), o.budget);
        xf_id[name] = high.value;
        pass = pass && high.value == image.size() &&
               o.primitives.fixed_points(high.witness).size() == image.size();
    }
    witness["xf_identity"] = xf_id;

    // Brute force: every table on the 2-point edge, filtered by the edge rule.
    const DigitalImage edge = digital_interval(0, 1);
    std::multiset<std::size_t> oracle;
    for (Index a = 0; a < 2; ++a)
        for (Index b = 0; b < 2; ++b)
            oracle.insert(std::size_t(a == 0) + std::size_t(b == 1));
    std::multiset<std::size_t> found;
    for (const auto& t : homotopy_class(DigitalMap::identity(edge), o.budget))
        found.insert(o.primitives.fixed_points(DigitalMap(edge, t)).size());
    witness["edge_fixed_point_counts"] = std::vector<std::size_t>(found.begin(), found.end());
    pass = pass && found == oracle && found == std::multiset<std::size_t>{0, 1, 1, 2};
    return {pass, witness};
}

ClaimOutcome rigid_wedge(const VerifyOptions& o)
{
    const DigitalImage wedge = wedge_of_loops(5, 5);
    const bool rigid = is_rigid(wedge);
    const auto s = summarize_class(DigitalMap::identity(wedge), o.budget);
    const auto unreachable = find_homotopy(DigitalMap::identity(wedge), DigitalMap::constant(wedge, 0), o.budget);
    return {rigid && s.class_size == 1 && s.mf == 9 && s.xf == 9 && !unreachable,
            {{"rigid", rigid}, {"class_size", s.class_size}, {"mf", s.mf}, {"xf", s.xf}}};
}

ClaimOutcome nonrigid_interval(const VerifyOptions& o)
{
    const DigitalImage edge = digital_interval(0, 1);
    const auto members = homotopy_class(DigitalMap::identity(edge), o.budget);
    const bool rigid = is_rigid(edge);
    return {!rigid && members.size() == 4, {{"rigid", rigid}, {"class", members}}};
}

ClaimOutcome constant_homotopic_to_fpf(const VerifyOptions& o)
{
    bool pass = true;
    Json witness = Json::object();
    for (const auto& [name, image] : std::vector<std::pair<std::string, DigitalImage>>{
             {"interval-0-1", digital_interval(0, 1)}, {"scc-4", simple_closed_curve(4)}}) {
        const HomotopyTrace trace = constant_to_fpf_homotopy(image, 0, 1);
        const bool one_step = is_one_step_homotopic(trace.front(), trace.back());
        const auto found = find_homotopy(trace.front(), trace.back(), o.budget);
        witness[name] = trace_to_json(trace);
        pass = pass && one_step && validate_homotopy(trace).valid && fixed_point_free(o, trace.back()) && found &&
               found->length() == 1;
    }
    bool singleton_rejected = false;
    try {
        constant_to_fpf_homotopy(singleton(), 0, 0);
    } catch (const Error&) {
        singleton_rejected = true;
    }
    witness["singleton_rejected"] = singleton_rejected;
    return {pass && singleton_rejected, witness};
}

ClaimOutcome homotopy_fpp_singleton_only(const VerifyOptions& o)
{
    bool pass = true;
    Json witness = Json::object();
    for (const auto& [name, image] : fixture_images()) {
        const auto r = homotopy_fixed_point_report(image);
        bool ok = r.holds == (image.size() == 1);
        if (image.size() > 1) {
            ok = ok && r.witness && validate_homotopy(*r.witness).valid && r.product_continuous;
            for (const auto& slice : r.witness->steps)
                ok = ok && o.primitives.continuous(slice) && fixed_point_free(o, slice);
        }
        witness[name] = {{"property", r.holds}, {"witness", r.witness ? trace_to_json(*r.witness) : Json(nullptr)}};
        pass = pass && ok;
    }
    return {pass, witness};
}

ClaimOutcome discreteness(const VerifyOptions&)
{
    bool pass = true;
    Json witness = Json::object();
    for (const auto& [name, image] : fixture_images()) {
        if (image.size() < 2)
            continue;
        Json row = Json::object();
        std::vector<MetricSpec> metrics = lp_metrics();
        if (is_connected(image))
            metrics.push_back(MetricSpec::path());
        for (const auto& metric : metrics) {
            const ExactReal m = min_positive_distance(image, metric);
            row[metric.name()] = exact_to_json(m);
            pass = pass && q(1) <= m;
        }
        witness[name] = row;
    }
    return {pass, witness};
}

std::optional<std::size_t> tail_oracle(const std::vector<Index>& s)
{
    if (s.size() >= 2 && s[s.size() - 2] != s.back())
        return std::nullopt;
    for (std::size_t n0 = 0; n0 < s.size(); ++n0)
        if (std::all_of(s.begin() + static_cast<std::ptrdiff_t>(n0) + 1, s.end(), [&](Index v) { return v == s.back(); }))
            return n0;
    return s.size() - 1;
}

ClaimOutcome eventually_constant(const VerifyOptions& o)
{
    std::mt19937_64 rng(o.seed);
    const auto fixtures = fixture_images();
    std::size_t agreed = 0, constant_tails = 0;
    Json mismatch = nullptr;
    for (int trial = 0; trial < 100; ++trial) {
        const auto& image = fixtures[rng() % fixtures.size()].image;
        const MetricSpec& metric = lp_metrics()[rng() % 3];
        const std::size_t prefix = rng() % 8, tail = rng() % 6;
        std::vector<Index> seq;
        for (std::size_t i = 0; i < prefix + 1; ++i)
            seq.push_back(static_cast<Index>(rng() % image.size()));
        seq.insert(seq.end(), tail, seq.back());
        const auto got = eventually_constant_tail(seq, image, metric);
        const auto want = tail_oracle(seq);
        constant_tails += want.has_value();
        if (got == want)
            ++agreed;
        else if (mismatch.is_null())
            mismatch = {{"sequence", seq}, {"got", got ? Json(*got) : Json(nullptr)}};
    }
    Json witness{{"seed", o.seed}, {"agreed", agreed}, {"with_constant_tail", constant_tails}};
    if (!mismatch.is_null())
        witness["mismatch"] = mismatch;
    return {agreed == 100, witness};
}

ClaimOutcome vacuous_families(const VerifyOptions& o)
{
    std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
    const auto fixtures = fixture_images();
    std::size_t passed = 0;
    Json failure = nullptr;
    for (int trial = 0; trial < 100; ++trial) {
        const auto& [name, image] = fixtures[rng() % fixtures.size()];
        const MetricSpec& metric = lp_metrics()[rng() % 3];
        const std::size_t n = image.size();
        MapTable table(n);
        for (auto& v : table)
            v = static_cast<Index>(rng() % n);
        std::vector<ExactReal> weights(n * n);
        for (auto& w : weights)
            w = q(static_cast<std::int64_t>(rng() % 20), 1 + static_cast<std::int64_t>(rng() % 4));
        const DigitalMap f(image, table);
        const bool expansive = is_beta_psi_phi_expansive(f, metric, PairWeight(n, std::move(weights)),
                                                         PsiFunction::zero(), PsiFunction::zero());
        const bool strict = is_weakly_uniformly_strict(f, metric, StrictnessVariant::Strict);
        if (expansive && strict)
            ++passed;
        else if (failure.is_null())
            failure = {{"image", name}, {"metric", metric.name()}, {"table", table}};
    }
    Json witness{{"seed", o.seed}, {"passed", passed}};
    if (!failure.is_null())
        witness["failure"] = failure;
    return {passed == 100, witness};
}

ClaimOutcome scc_shift_family(const VerifyOptions& o)
{
    bool pass = true;
    Json witness = Json::object();
    for (std::size_t n = 4; n <= 12; ++n) {
        if (n == 5) {
            bool rejected = false;
            try {
                simple_closed_curve(5);
            } catch (const Error&) {
                rejected = true;
            }
            witness["5"] = {{"rejected", rejected}};
            pass = pass && rejected;
            continue;
        }
        const DigitalMap shift = cyclic_shift(simple_closed_curve(n), 2);
        const bool continuous = o.primitives.continuous(shift);
        const auto approx = approximate_fixed_points(shift);
        witness[std::to_string(n)] = {{"continuous", continuous}, {"approximate_fixed_points", approx.size()}};
        pass = pass && continuous && approx.empty();
    }
    return {pass, witness};
}

ClaimOutcome cu_degree_counts(const VerifyOptions&)
{
    // neighbors of the origin among the 3^n - 1 surrounding points
    const std::map<std::pair<unsigned, unsigned>, std::size_t> expected{
        {{1, 1}, 2}, {{2, 1}, 4}, {{2, 2}, 8}, {{3, 1}, 6}, {{3, 2}, 18}, {{3, 3}, 26}};
    bool pass = true;
    Json witness = Json::object();
    for (const auto& [key, want] : expected) {
        const auto [n, u] = key;
        const std::vector<std::pair<Coord, Coord>> bounds(n, {-1, 1});
        const DigitalImage box = digital_picture(bounds);
        std::vector<Point> points = box.points();
        const DigitalImage image = build_image(points, AdjacencySpec::cu(u));
        const Index origin = image.find(Point(std::vector<Coord>(n, 0)));
        std::size_t counted = 0;
        for (const auto& p : points)
            counted += cu_adjacent(image.point(origin), p, u);
        witness["Z" + std::to_string(n) + "/c" + std::to_string(u)] = counted;
        pass = pass && counted == want && image.neighbors(origin).size() == want;
    }
    return {pass, witness};
}

ClaimOutcome reich_implies_contraction_kannan(const VerifyOptions&)
{
    bool pass = true;
    std::size_t checked = 0;
    for (const auto& image : {digital_interval(0, 2), digital_picture({{0, 1}, {0, 1}})}) {
        for (const auto& metric : lp_metrics()) {
            for_each_selfmap(image, [&](std::span<const Index> t) {
                const DigitalMap f(image, MapTable(t.begin(), t.end()));
                const ExactReal modulus = contraction_modulus(f, metric);
                for (const auto& c : {q(1, 4), q(1, 2), q(3, 4)})
                    if (is_reich(f, metric, 0, 0, c)) {
                        ++checked;
                        pass = pass && modulus <= c;
                    }
                for (const auto& a : {q(1, 8), q(1, 4), q(3, 8)})
                    if (is_reich(f, metric, a, a, 0)) {
                        ++checked;
                        pass = pass && is_kannan(f, metric, a);
                    }
                return pass;
            });
        }
    }
    return {pass, {{"implications_checked", checked}}};
}

ClaimOutcome zamfirescu_rhoades_bound(const VerifyOptions&)
{
    bool pass = true;
    std::size_t checked = 0;
    for (const auto& image : {digital_interval(0, 2), digital_picture({{0, 1}, {0, 1}})}) {
        for (const auto& metric : lp_metrics()) {
            const auto d = distance_table(image, metric);
            for_each_selfmap(image, [&](std::span<const Index> t) {
                const DigitalMap f(image, MapTable(t.begin(), t.end()));
                for (const auto& alpha : {q(1, 4), q(1, 2), q(3, 4)}) {
                    const bool z = is_zamfirescu(f, metric, alpha);
                    const bool r = is_rhoades(f, metric, alpha);
                    // Zamfirescu's bound never exceeds Rhoades'.
                    pass = pass && (!z || r);
                    if (!z)
                        continue;
                    bool dominated = true;
                    for (Index x = 0; x < f.size(); ++x) {
                        for (Index y = x + 1; y < f.size(); ++y) {
                            const ExactReal& dxy = (*d)(x, y);
                            const ExactReal kannan = ((*d)(x, f(x)) + (*d)(y, f(y))) * q(1, 2);
                            const ExactReal chatterjea = ((*d)(x, f(y)) + (*d)(y, f(x))) * q(1, 2);
                            const bool max_is_distance = kannan <= dxy && chatterjea <= dxy;
                            dominated = dominated && max_is_distance;
                            if (max_is_distance) {
                                ++checked;
                                pass = pass && (*d)(f(x), f(y)) <= alpha * dxy;
                            }
                        }
                    }
                    if (dominated)
                        pass = pass && contraction_modulus(f, metric) <= alpha;
                }
                return pass;
            });
        }
    }
    return {pass, {{"pairs_checked", checked}}};
}

ClaimOutcome contraction_implies_ulc(const VerifyOptions&)
{
    bool pass = true;
    std::size_t checked = 0;
    for (const auto& image : {digital_interval(0, 3), digital_picture({{0, 1}, {0, 1}})}) {
        for (const auto& metric : lp_metrics()) {
            for_each_selfmap(image, [&](std::span<const Index> t) {
                const DigitalMap f(image, MapTable(t.begin(), t.end()));
                const ExactReal mu = contraction_modulus(f, metric);
                if (!(mu < q(1)))
                    return true;
                ++checked;
                pass = pass && is_uniformly_locally_contractive(f, metric, mu) &&
                       is_uniformly_locally_contractive(f, metric, (mu + q(1)) * q(1, 2));
                return pass;
            });
        }
    }
    return {pass, {{"contractions_checked", checked}}};
}

ClaimOutcome expansive_doubling_prefix(const VerifyOptions&)
{
    const DigitalImage domain = digital_interval(1, 5);
    const DigitalImage codomain = digital_interval(1, 10);
    MapTable table;
    for (Index i = 0; i < domain.size(); ++i)
        table.push_back(codomain.find(Point{2 * domain.point(i)[0]}));
    const DigitalMap f(domain, codomain, table);
    const ExactReal k = expansive_modulus(f, MetricSpec::l1());
    return {k == q(2) && is_expansive(f, MetricSpec::l1(), q(2)), {{"modulus", exact_to_json(k)}}};
}

ClaimOutcome onto_affine_doubling(const VerifyOptions&)
{
    // X ranges over nonempty subsets of [-5, 6]; n -> 2n - 1 maps X onto
    // itself only for X = {1}.
    const Coord lo = -5, hi = 6;
    const std::size_t width = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::vector<Coord>> onto_sets;
    std::size_t self_maps = 0;
    for (std::uint32_t mask = 1; mask < (1u << width); ++mask) {
        std::vector<Point> points;
        for (std::size_t b = 0; b < width; ++b)
            if (mask >> b & 1u)
                points.push_back(Point{lo + static_cast<Coord>(b)});
        const DigitalImage image = build_image(points, AdjacencySpec::cu(1));
        MapTable table;
        for (const auto& p : image.points()) {
            const Index j = image.find(Point{2 * p[0] - 1});
            if (j == image.size())
                break;
            table.push_back(j);
        }
        if (table.size() != image.size())
            continue;
        ++self_maps;
        if (is_onto(DigitalMap(image, table))) {
            std::vector<Coord> xs;
            for (const auto& p : image.points())
                xs.push_back(p[0]);
            onto_sets.push_back(xs);
        }
    }
    const bool pass = onto_sets == std::vector<std::vector<Coord>>{{1}};
    return {pass, {{"self_maps", self_maps}, {"onto_sets", onto_sets}}};
}

ClaimOutcome reciprocal_gaps(const VerifyOptions&)
{
    const auto gaps = reciprocal_metric_gaps(50);
    bool pass = true;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        const long long k = static_cast<long long>(i + 1);
        pass = pass && gaps[i] == Rational(1, k * (k + 1));
        if (i > 0)
            pass = pass && gaps[i] < gaps[i - 1];
    }
    // distinct lattice points never come closer than 1
    pass = pass && q(1) <= min_positive_distance(digital_interval(1, 50), MetricSpec::l1());
    return {pass, {{"last_gap", gaps.back().str()}}};
}

ClaimOutcome intimate_reduction(const VerifyOptions&)
{
    const DigitalImage image = digital_interval(0, 2);
    const MetricSpec l1 = MetricSpec::l1();
    const DigitalMap zero = DigitalMap::constant(image, 0);
    const DigitalMap g(image, MapTable{1, 0, 0});
    const DigitalMap shifted(image, MapTable{1, 1, 1});
    bool self = true;
    for_each_selfmap(image, [&](std::span<const Index> t) {
        const DigitalMap f(image, MapTable(t.begin(), t.end()));
        self = self && is_intimate(f, f, l1);
        return self;
    });
    const bool disjoint = is_intimate(zero, shifted, l1);
    const bool counter = !is_intimate(zero, g, l1);
    return {self && disjoint && counter, {{"self", self}, {"disjoint_agreement", disjoint}, {"reduced_failure", counter}}};
}

// Runs the Jain check over every pair (S, T) of self-maps of [0, 2]_Z and a
// grid of multipliers, keeping the cases where the hypothesis holds.
template <typename Visit>
void for_each_jain_case(Visit visit)
{
    const DigitalImage image = digital_interval(0, 2);
    std::vector<MapTable> tables;
    for_each_selfmap(image, [&](std::span<const Index> t) {
        tables.emplace_back(t.begin(), t.end());
        return true;
    });
    for (const auto& s : tables)
        for (const auto& t : tables)
            for (const auto& alpha : {q(1, 10), q(1, 4), q(1, 2), q(9, 10)}) {
                const DigitalMap sm(image, s), tm(image, t);
                const JainCheck c = jain_triviality_check(sm, tm, MetricSpec::l1(), alpha);
                if (c.outcome != JainCheck::Outcome::HypothesisNotSatisfied)
                    visit(sm, tm, alpha, c);
            }
}

ClaimOutcome jain_alpha_bound(const VerifyOptions&)
{
    std::size_t cases = 0;
    bool pass = true;
    for_each_jain_case([&](const DigitalMap& s, const DigitalMap& t, const ExactReal&, const JainCheck& c) {
        if (!c.alpha_below_bound)
            return;
        ++cases;
        pass = pass && is_constant(s) && is_constant(t) && s(0) == t(0);
    });
    const DigitalImage edge = digital_interval(0, 1);
    const auto id = jain_triviality_check(DigitalMap::identity(edge), DigitalMap::identity(edge), MetricSpec::l1(), q(1, 4));
    const auto constant =
        jain_triviality_check(DigitalMap::constant(edge, 1), DigitalMap::constant(edge, 1), MetricSpec::l1(), q(1, 4));
    pass = pass && cases > 0 && id.outcome == JainCheck::Outcome::HypothesisNotSatisfied &&
           constant.outcome == JainCheck::Outcome::ConclusionHolds;
    return {pass,
            {{"cases_below_bound", cases},
             {"identity_edge", to_string(id.outcome)},
             {"constant_edge", to_string(constant.outcome)}}};
}

ClaimOutcome jain_diameter_case(const VerifyOptions&)
{
    std::size_t cases = 0;
    Json counterexamples = Json::array();
    for_each_jain_case([&](const DigitalMap& s, const DigitalMap& t, const ExactReal& alpha, const JainCheck& c) {
        if (!c.diameter_case)
            return;
        ++cases;
        if (s.size() != 1 && counterexamples.size() < 5)
            counterexamples.push_back({{"S", s.table()}, {"T", t.table()}, {"alpha", exact_to_json(alpha)}});
    });
    return {counterexamples.empty(), {{"diameter_cases", cases}, {"counterexamples", counterexamples}}};
}

std::vector<Claim> build_suite()
{
    std::vector<Claim> claims{
        {"afpp-pictures-and-cycles", "pictures have the approximate fixed point property; simple closed curves do not",
         afpp_pictures_and_cycles},
        {"antipodal-punctured-square", "the antipodal map of the punctured square is continuous without fixed points",
         antipodal_punctured_square},
        {"constancy-contraction", "contractions below min(1, M2/M1) are constant", constancy_contraction},
        {"constancy-kannan-chatterjea", "Kannan and Chatterjea maps below 1/(2 diam) are constant",
         constancy_kannan_chatterjea},
        {"constancy-reich", "Reich maps with weights below 1/(3 diam) are constant", constancy_reich},
        {"constancy-ulc", "uniformly locally contractive maps on connected images are constant", constancy_ulc},
        {"constant-homotopic-to-fpf", "a constant map is homotopic to a fixed-point-free map",
         constant_homotopic_to_fpf},
        {"contraction-implies-ulc", "a contraction with modulus mu is uniformly locally contractive for mu' >= mu",
         contraction_implies_ulc},
        {"cu-degree-counts", "c_u neighbor counts in Z, Z^2 and Z^3", cu_degree_counts},
        {"discreteness", "distinct lattice points are at distance at least 1 under every l_p", discreteness},
        {"eventually-constant-tail", "Cauchy sequences of lattice points are eventually constant", eventually_constant},
        {"expansive-doubling-prefix", "n -> 2n expands distances by 2", expansive_doubling_prefix},
        {"fpp-singleton-only", "the fixed point property holds only on singletons", fpp_singleton_only},
        {"homotopy-fpp-singleton-only", "homotopies have paths of fixed points only on singletons",
         homotopy_fpp_singleton_only},
        {"intimate-reduction", "intimacy of f and g reduces to comparisons at agreement values", intimate_reduction},
        {"jain-alpha-bound", "below alpha < min 1/F the common fixed point hypothesis forces one constant map",
         jain_alpha_bound},
        {"jain-diameter-case", "diam(S(X) u T(X)) = diam X with the hypothesis forces a singleton",
         jain_diameter_case},
        {"mf-xf-anchors", "minimal and maximal fixed point counts over homotopy classes", mf_xf_anchors},
        {"no-onto-expansive", "no onto self-map of a finite image is expansive", no_onto_expansive},
        {"noncontinuous-contraction", "a non-continuous map in every contraction family", noncontinuous_contraction},
        {"nonrigid-interval", "the two-point interval is not rigid", nonrigid_interval},
        {"onto-affine-doubling", "n -> 2n - 1 maps X onto itself only for X = {1}", onto_affine_doubling},
        {"reciprocal-metric-gaps", "1/i - 1/(i+1) shrinks without bound, unlike lattice distances", reciprocal_gaps},
        {"reich-implies-contraction-kannan", "Reich weights (0,0,c) bound the modulus; (a,a,0) give Kannan",
         reich_implies_contraction_kannan},
        {"rigid-wedge", "the wedge of two 5-cycles is rigid", rigid_wedge},
        {"scc-shift-family", "shift by 2 on simple closed curves is continuous with no approximate fixed point",
         scc_shift_family},
        {"vacuous-families", "every map is beta-psi-phi expansive with zero psi, phi and weakly uniformly strict",
         vacuous_families},
        {"zamfirescu-rhoades-bound", "Zamfirescu maps satisfy the contraction bound where d(x, y) is the maximum",
         zamfirescu_rhoades_bound},
    };
    std::sort(claims.begin(), claims.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
    return claims;
}

ClaimRecord run_one(const Claim& claim, const VerifyOptions& options)
{
    ClaimRecord record{claim.id, claim.locus, Verdict::Skipped, nullptr, 0.0};
    if (options.skip.count(claim.id))
        return record;
    const auto start = std::chrono::steady_clock::now();
    try {
        ClaimOutcome outcome = claim.run(options);
        record.verdict = outcome.pass ? Verdict::Pass : Verdict::Fail;
        record.witness = std::move(outcome.witness);
    } catch (const std::exception& e) {
        record.verdict = Verdict::Fail;
        record.witness = {{"error", e.what()}};
    }
    record.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
}

} // namespace

std::vector<NamedImage> fixture_images()
{
    return {
        {"singleton", singleton()},
        {"singleton-z2", singleton(2)},
        {"interval-0-1", digital_interval(0, 1)},
        {"interval-0-2", digital_interval(0, 2)},
        {"interval-0-3", digital_interval(0, 3)},
        {"picture-2x2", digital_picture({{0, 1}, {0, 1}})},
        {"picture-3x2", digital_picture({{0, 2}, {0, 1}})},
        {"product-edge-edge", normal_product(digital_interval(0, 1), digital_interval(0, 1))},
        {"scc-4", simple_closed_curve(4)},
        {"scc-6", simple_closed_curve(6)},
        {"scc-8", simple_closed_curve(8)},
        {"example-4-2", example_4_2_image()},
        {"punctured-square-c1", punctured_square(1)},
        {"punctured-square-c2", punctured_square(2)},
        {"wedge-5-5", wedge_of_loops(5, 5)},
        {"two-points-apart", build_image({Point{0}, Point{2}}, AdjacencySpec::cu(1))},
    };
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass:
        return "pass";
    case Verdict::Fail:
        return "fail";
    case Verdict::Skipped:
        return "skipped";
    }
    return "?";
}

Primitives Primitives::standard()
{
    return {[](const DigitalMap& f) { return is_continuous(f); }, [](const DigitalMap& f) { return digifix::fixed_points(f); }};
}

Primitives Primitives::mutant(const std::string& name)
{
    Primitives p = standard();
    if (name == "invert-continuity")
        p.continuous = [](const DigitalMap& f) { return !is_continuous(f); };
    else if (name == "no-fixed-points")
        p.fixed_points = [](const DigitalMap&) { return std::vector<Index>{}; };
    else
        throw Error("unknown mutant \"" + name + "\"");
    return p;
}

const std::vector<Claim>& claim_suite()
{
    static const std::vector<Claim> suite = build_suite();
    return suite;
}

std::vector<ClaimRecord> run_claims(const VerifyOptions& options)
{
    const auto& suite = claim_suite();
    for (const auto& id : options.skip)
        if (std::none_of(suite.begin(), suite.end(), [&](const Claim& c) { return c.id == id; }))
            throw Error("unknown claim id \"" + id + "\"");

    std::vector<ClaimRecord> records(suite.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < suite.size(); i = next++)
            records[i] = run_one(suite[i], options);
    };
    const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, suite.size()));
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    return records;
}

Json records_to_json(const std::vector<ClaimRecord>& records, bool timings)
{
    Json claims = Json::array();
    for (const auto& r : records) {
        Json j{{"id", r.id}, {"locus", r.locus}, {"verdict", to_string(r.verdict)}, {"witness", r.witness}};
        if (timings)
            j["seconds"] = r.seconds;
        claims.push_back(std::move(j));
    }
    std::size_t failed = 0, skipped = 0;
    for (const auto& r : records) {
        failed += r.verdict == Verdict::Fail;
        skipped += r.verdict == Verdict::Skipped;
    }
    return {{"claims", claims},
            {"summary", {{"total", records.size()}, {"failed", failed}, {"skipped", skipped}}}};
}

std::string records_table(const std::vector<ClaimRecord>& records)
{
    std::size_t width = 5;
    for (const auto& r : records)
        width = std::max(width, r.id.size());
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(width)) << "claim" << "  verdict  seconds  statement\n";
    for (const auto& r : records) {
        os << std::left << std::setw(static_cast<int>(width)) << r.id << "  " << std::setw(7) << to_string(r.verdict)
           << "  " << std::right << std::setw(7) << std::fixed << std::setprecision(3) << r.seconds << "  " << r.locus
           << "\n";
        if (r.verdict == Verdict::Fail)
            os << "    " << r.witness.dump() << "\n";
    }
    return os.str();
}

bool all_passed(const std::vector<ClaimRecord>& records)
{
    return std::none_of(records.begin(), records.end(), [](const ClaimRecord& r) { return r.verdict == Verdict::Fail; });
}

} // namespace digifix
