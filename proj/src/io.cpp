#include "digifix/io.hpp"

#include <fstream>
#include <limits>

namespace digifix {

namespace {

using boost::multiprecision::cpp_int;

Json integer_to_json(const cpp_int& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

cpp_int integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return cpp_int(j.get<std::int64_t>());
    if (j.is_string())
        return cpp_int(j.get<std::string>());
    throw Error("expected an integer");
}

Json term_to_json(const cpp_int& radicand, const Rational& coeff)
{
    Json j;
    j["num"] = integer_to_json(numerator(coeff));
    j["den"] = integer_to_json(denominator(coeff));
    if (radicand != 1)
        j["sqrt"] = integer_to_json(radicand);
    return j;
}

ExactReal term_from_json(const Json& j)
{
    const cpp_int num = integer_from_json(j.at("num"));
    const cpp_int den = integer_from_json(j.value("den", Json(1)));
    if (den == 0)
        throw Error("zero denominator");
    ExactReal value(Rational(num, den));
    if (j.contains("sqrt"))
        value *= ExactReal::sqrt_of(integer_from_json(j.at("sqrt")));
    return value;
}

template <typename T>
Json optional_exact(const std::optional<T>& v)
{
    return v ? exact_to_json(*v) : Json(nullptr);
}

const Json& require(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw Error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

} // namespace

Json exact_to_json(const ExactReal& value)
{
    if (value.is_zero())
        return {{"num", 0}, {"den", 1}};
    if (value.terms().size() == 1)
        return term_to_json(value.terms()[0].first, value.terms()[0].second);
    Json terms = Json::array();
    for (const auto& [radicand, coeff] : value.terms())
        terms.push_back(term_to_json(radicand, coeff));
    return {{"terms", terms}};
}

ExactReal exact_from_json(const Json& j)
{
    try {
        if (j.is_number_integer())
            return ExactReal(j.get<std::int64_t>());
        if (j.contains("terms")) {
            ExactReal sum;
            for (const auto& t : j.at("terms"))
                sum += term_from_json(t);
            return sum;
        }
        return term_from_json(j);
    } catch (const Json::exception& e) {
        throw Error(std::string("malformed exact number: ") + e.what());
    }
}

Json adjacency_to_json(const AdjacencySpec& spec)
{
    return std::visit(
        [](const auto& a) -> Json {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, adjacency::CU>) {
                return {{"type", "cu"}, {"u", a.u}};
            } else if constexpr (std::is_same_v<T, adjacency::Custom>) {
                Json edges = Json::array();
                for (const auto& [i, j] : a.edges)
                    edges.push_back({i, j});
                return {{"type", "custom"}, {"edges", edges}};
            } else {
                return {{"type", "normal_product"},
                        {"left", adjacency_to_json(*a.left)},
                        {"right", adjacency_to_json(*a.right)},
                        {"left_dim", a.split}};
            }
        },
        spec.variant);
}

AdjacencySpec adjacency_from_json(const Json& j)
{
    try {
        const auto type = require(j, "type").get<std::string>();
        if (type == "cu")
            return AdjacencySpec::cu(require(j, "u").get<unsigned>());
        if (type == "custom") {
            std::vector<std::pair<Index, Index>> edges;
            for (const auto& e : require(j, "edges")) {
                if (!e.is_array() || e.size() != 2)
                    throw Error("custom edges must be index pairs");
                edges.emplace_back(e[0].get<Index>(), e[1].get<Index>());
            }
            return AdjacencySpec::custom(std::move(edges));
        }
        if (type == "normal_product")
            return AdjacencySpec::normal_product(adjacency_from_json(require(j, "left")),
                                                 adjacency_from_json(require(j, "right")),
                                                 require(j, "left_dim").get<std::size_t>());
        throw Error("unknown adjacency type \"" + type + "\"");
    } catch (const Json::exception& e) {
        throw Error(std::string("malformed adjacency: ") + e.what());
    }
}

Json image_to_json(const DigitalImage& image)
{
    Json points = Json::array();
    for (const auto& p : image.points())
        points.push_back(p.coords);
    return {{"dim", image.dim()}, {"points", points}, {"adjacency", adjacency_to_json(image.adjacency())}};
}

DigitalImage image_from_json(const Json& j)
{
    try {
        const auto dim = require(j, "dim").get<std::size_t>();
        std::vector<Point> points;
        for (const auto& p : require(j, "points")) {
            Point point(p.get<std::vector<Coord>>());
            if (point.dim() != dim)
                throw Error("point dimension does not match \"dim\"");
            points.push_back(std::move(point));
        }
        return build_image(std::move(points), adjacency_from_json(require(j, "adjacency")));
    } catch (const Json::exception& e) {
        throw Error(std::string("malformed image: ") + e.what());
    }
}

Json metric_to_json(const MetricSpec& metric)
{
    if (!metric.is_lp())
        return {{"type", "path"}};
    if (!metric.is_exact())
        return {{"type", "lp"}, {"p", metric.p}};
    if (metric == MetricSpec::linf())
        return {{"type", "lp"}, {"p", "inf"}};
    return {{"type", "lp"}, {"p", static_cast<int>(metric.p)}};
}

MetricSpec metric_from_json(const Json& j)
{
    try {
        const auto type = require(j, "type").get<std::string>();
        if (type == "path")
            return MetricSpec::path();
        if (type != "lp")
            throw Error("unknown metric type \"" + type + "\"");
        const Json& p = require(j, "p");
        if (p.is_string()) {
            if (p.get<std::string>() != "inf")
                throw Error("metric p must be 1, 2 or \"inf\"");
            return MetricSpec::linf();
        }
        const auto value = p.get<double>();
        if (value != 1.0 && value != 2.0)
            throw Error("metric p must be 1, 2 or \"inf\"");
        return MetricSpec::lp(value);
    } catch (const Json::exception& e) {
        throw Error(std::string("malformed metric: ") + e.what());
    }
}

Json map_to_json(const DigitalMap& f)
{
    return {{"domain", image_to_json(f.domain())},
            {"codomain", image_to_json(f.codomain())},
            {"table", f.table()}};
}

DigitalMap map_from_json(const Json& j, const std::filesystem::path& base)
{
    auto load = [&](const Json& ref) {
        if (ref.is_string())
            return image_from_json(read_json_file(base / ref.get<std::string>()));
        return image_from_json(ref);
    };
    try {
        DigitalImage domain = load(require(j, "domain"));
        DigitalImage codomain = j.contains("codomain") ? load(j.at("codomain")) : domain;
        return {std::move(domain), std::move(codomain), require(j, "table").get<MapTable>()};
    } catch (const Json::exception& e) {
        throw Error(std::string("malformed map: ") + e.what());
    }
}

Json trace_to_json(const HomotopyTrace& trace)
{
    Json steps = Json::array();
    for (const auto& f : trace.steps)
        steps.push_back(f.table());
    return steps;
}

HomotopyTrace trace_from_json(const Json& j, const DigitalImage& image)
{
    try {
        HomotopyTrace trace;
        for (const auto& t : j)
            trace.steps.emplace_back(image, t.get<MapTable>());
        return trace;
    } catch (const Json::exception& e) {
        throw Error(std::string("malformed trace: ") + e.what());
    }
}

Json report_to_json(const ClassificationReport& r)
{
    Json j;
    j["metric"] = r.metric;
    j["continuous"] = r.continuous;
    j["constant"] = r.constant;
    j["onto"] = r.onto;
    j["fixed_points"] = r.fixed;
    j["approximate_fixed_points"] = r.approximate_fixed;
    j["contraction"] = {{"verdict", r.contraction}, {"modulus", exact_to_json(r.contraction_modulus)}};
    j["kannan"] = {{"verdict", r.kannan}, {"min_alpha", optional_exact(r.kannan_min_alpha)}};
    j["chatterjea"] = {{"verdict", r.chatterjea}, {"min_alpha", optional_exact(r.chatterjea_min_alpha)}};
    j["reich"] = {{"verdict", r.reich},
                  {"min_weights",
                   {{"a", exact_to_json(r.reich_weights.a)},
                    {"b", exact_to_json(r.reich_weights.b)},
                    {"c", exact_to_json(r.reich_weights.c)},
                    {"sum", exact_to_json(r.reich_weights.sum())}}}};
    j["zamfirescu"] = {{"verdict", r.zamfirescu}, {"min_alpha", exact_to_json(r.zamfirescu_min_alpha)}};
    j["rhoades"] = {{"verdict", r.rhoades}, {"min_alpha", exact_to_json(r.rhoades_min_alpha)}};
    j["uniformly_locally_contractive"] = {{"verdict", r.uniformly_locally_contractive},
                                          {"min_alpha", exact_to_json(r.ulc_min_alpha)}};
    j["alpha_psi_contractive_linear"] = {{"verdict", r.alpha_psi_linear}};
    j["beta_psi_phi_expansive_degenerate"] = {{"verdict", r.beta_psi_phi_degenerate}};
    j["expansive"] = {{"verdict", r.expansive}, {"modulus", optional_exact(r.expansive_modulus)}};
    j["weakly_uniformly_strict"] = {{"verdict", r.weakly_uniformly_strict}};
    j["weakly_uniformly_strict_weak"] = {{"verdict", r.weakly_uniformly_strict_weak}};
    if (r.at_alpha) {
        const auto& a = *r.at_alpha;
        Json at;
        at["alpha"] = exact_to_json(a.alpha);
        at["contraction"] = to_string(a.contraction);
        at["kannan"] = a.kannan ? Json(*a.kannan) : Json(nullptr);
        at["chatterjea"] = a.chatterjea ? Json(*a.chatterjea) : Json(nullptr);
        at["zamfirescu"] = a.zamfirescu;
        at["rhoades"] = a.rhoades;
        at["uniformly_locally_contractive"] = a.uniformly_locally_contractive;
        j["at_alpha"] = at;
    }
    return j;
}

Json summary_to_json(const HomotopyClassSummary& s)
{
    return {{"class_size", s.class_size},
            {"mf", s.mf},
            {"xf", s.xf},
            {"mf_witness", s.mf_witness.table()},
            {"xf_witness", s.xf_witness.table()}};
}

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw Error(path.string() + ": " + e.what());
    }
}

} // namespace digifix
