// digifix command-line front end.
//
// Exit codes: 0 success (all claims pass), 1 claim failure, 2 usage or input
// error.

#include "digifix/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace digifix;

constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;

struct Globals {
    std::string metric = "l1";
    std::size_t budget = kDefaultNodeBudget;
    std::uint64_t seed = 20190527;
    bool json = false;
};

void emit(const Json& j, const Globals& g, std::ostream& os = std::cout)
{
    if (g.json) {
        os << j.dump(2) << "\n";
        return;
    }
    for (const auto& [key, value] : j.items())
        os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

void write_output(const Json& j, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

DigitalImage load_image(const std::string& path)
{
    return image_from_json(read_json_file(path));
}

DigitalMap load_map(const std::string& path)
{
    return map_from_json(read_json_file(path), std::filesystem::path(path).parent_path());
}

// "9/20", "0.45" or "1"
ExactReal parse_exact(const std::string& text)
{
    try {
        const auto slash = text.find('/');
        if (slash != std::string::npos)
            return ExactReal(Rational(boost::multiprecision::cpp_int(text.substr(0, slash)),
                                      boost::multiprecision::cpp_int(text.substr(slash + 1))));
        const auto dot = text.find('.');
        if (dot == std::string::npos)
            return ExactReal(Rational(boost::multiprecision::cpp_int(text)));
        const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        boost::multiprecision::cpp_int den = 1;
        for (std::size_t i = dot + 1; i < text.size(); ++i)
            den *= 10;
        return ExactReal(Rational(boost::multiprecision::cpp_int(digits), den));
    } catch (const std::exception&) {
        throw Error("not a number: " + text);
    }
}

// "x,y,z"
Point parse_point(const std::string& text)
{
    std::vector<Coord> coords;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ','))
        coords.push_back(std::stoll(part));
    if (coords.empty())
        throw Error("empty point");
    return Point(std::move(coords));
}

Json image_info(const DigitalImage& image, const MetricSpec& metric)
{
    Json j{{"size", image.size()},
           {"dim", image.dim()},
           {"edges", image.edge_count()},
           {"connected", is_connected(image)},
           {"components", connected_components(image).size()}};
    if (metric.is_lp() || is_connected(image)) {
        j["metric"] = metric.name();
        j["diameter"] = exact_to_json(diameter(image, metric));
        if (image.size() > 1)
            j["min_positive_distance"] = exact_to_json(min_positive_distance(image, metric));
        const auto m1 = max_adjacent_distance(image, metric);
        j["max_adjacent_distance"] = m1 ? exact_to_json(*m1) : Json(nullptr);
    }
    return j;
}

Json map_info(const DigitalMap& f)
{
    Json j{{"size", f.size()}, {"continuous", is_continuous(f)}, {"constant", is_constant(f)}};
    if (f.is_self_map()) {
        j["onto"] = is_onto(f);
        j["fixed_points"] = fixed_points(f);
        j["approximate_fixed_points"] = approximate_fixed_points(f);
    }
    return j;
}

Json property_json(const char* name, const PropertyVerdict& v)
{
    return {{name, v.holds}, {"witness", v.witness ? Json(v.witness->table()) : Json(nullptr)}};
}

Json extreme_json(const char* name, const FixedPointExtreme& e)
{
    return {{name, e.value},
            {"witness", e.witness.table()},
            {"class_size", e.class_size ? Json(*e.class_size) : Json("not fully explored")}};
}

int run(int argc, char** argv)
{
    CLI::App app{"Fixed point and contraction checks for digital images"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--metric", g.metric, "l1, l2, linf or path")->capture_default_str();
    app.add_option("--budget", g.budget, "node budget for homotopy searches")->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized checks")->capture_default_str();
    app.add_flag("--json", g.json, "print JSON");

    std::function<Json()> action;
    int exit_code = 0;

    // image
    auto* image_cmd = app.add_subcommand("image", "create, describe or generate images");
    image_cmd->require_subcommand(1);
    std::string out_path;

    auto* create = image_cmd->add_subcommand("create", "image from points and an adjacency");
    std::vector<std::string> point_texts;
    unsigned create_u = 1;
    std::vector<std::string> edge_texts;
    create->add_option("--point", point_texts, "point as x,y,...")->required();
    create->add_option("--u", create_u, "c_u adjacency")->capture_default_str();
    create->add_option("--edge", edge_texts, "custom edge i,j (replaces c_u)");
    create->add_option("-o,--output", out_path);
    create->callback([&] {
        action = [&] {
            std::vector<Point> points;
            for (const auto& t : point_texts)
                points.push_back(parse_point(t));
            AdjacencySpec spec = AdjacencySpec::cu(create_u);
            if (!edge_texts.empty()) {
                std::vector<std::pair<Index, Index>> edges;
                for (const auto& t : edge_texts) {
                    const Point p = parse_point(t);
                    if (p.dim() != 2 || p[0] < 0 || p[1] < 0)
                        throw Error("edge must be i,j");
                    edges.emplace_back(static_cast<Index>(p[0]), static_cast<Index>(p[1]));
                }
                spec = AdjacencySpec::custom(std::move(edges));
            }
            write_output(image_to_json(build_image(std::move(points), std::move(spec))), out_path);
            return Json();
        };
    });

    auto* info = image_cmd->add_subcommand("info", "size, connectivity and distances");
    std::string image_path;
    info->add_option("image", image_path)->required();
    info->callback([&] { action = [&] { return image_info(load_image(image_path), MetricSpec::parse(g.metric)); }; });

    auto* generate = image_cmd->add_subcommand("generate", "standard images");
    generate->require_subcommand(1);
    generate->add_option("-o,--output", out_path);
    auto add_generator = [&](const std::string& name, const std::string& help, std::function<DigitalImage()> make) {
        auto* cmd = generate->add_subcommand(name, help);
        cmd->add_option("-o,--output", out_path);
        cmd->callback([&, make] {
            action = [&, make] {
                write_output(image_to_json(make()), out_path);
                return Json();
            };
        });
        return cmd;
    };
    Coord lo = 0, hi = 1;
    auto* interval = add_generator("interval", "[a, b]_Z", [&] { return digital_interval(lo, hi); });
    interval->add_option("--a", lo)->required();
    interval->add_option("--b", hi)->required();

    std::vector<std::string> bound_texts;
    auto* picture = add_generator("picture", "product of intervals with c_n", [&] {
        std::vector<std::pair<Coord, Coord>> bounds;
        for (const auto& t : bound_texts) {
            const auto colon = t.find(':');
            if (colon == std::string::npos)
                throw Error("bound must be a:b");
            bounds.emplace_back(std::stoll(t.substr(0, colon)), std::stoll(t.substr(colon + 1)));
        }
        return digital_picture(bounds);
    });
    picture->add_option("--bound", bound_texts, "a:b per coordinate")->required();

    std::size_t cycle_n = 4, wedge_m = 5;
    add_generator("scc", "simple closed curve in Z^2", [&] { return simple_closed_curve(cycle_n); })
        ->add_option("--n", cycle_n)
        ->required();
    auto* wedge = add_generator("wedge", "two cycles sharing a point", [&] { return wedge_of_loops(wedge_m, cycle_n); });
    wedge->add_option("--m", wedge_m)->required();
    wedge->add_option("--n", cycle_n)->required();

    std::string left_path, right_path;
    auto* product = add_generator("normal-product", "normal product of two images",
                                  [&] { return normal_product(load_image(left_path), load_image(right_path)); });
    product->add_option("--left", left_path)->required();
    product->add_option("--right", right_path)->required();

    add_generator("example-4-2", "three points of Z^5 with c_5", [] { return example_4_2_image(); });
    unsigned square_u = 1;
    add_generator("punctured-square", "[-1,1]^2 without the origin", [&] { return punctured_square(square_u); })
        ->add_option("--u", square_u)
        ->capture_default_str();
    std::size_t singleton_dim = 1;
    add_generator("singleton", "one point", [&] { return singleton(singleton_dim); })
        ->add_option("--dim", singleton_dim)
        ->capture_default_str();

    // map
    auto* map_cmd = app.add_subcommand("map", "describe or generate maps");
    map_cmd->require_subcommand(1);
    std::string map_path;
    auto* map_info_cmd = map_cmd->add_subcommand("info", "continuity and fixed points");
    map_info_cmd->add_option("map", map_path)->required();
    map_info_cmd->callback([&] { action = [&] { return map_info(load_map(map_path)); }; });

    auto* map_generate = map_cmd->add_subcommand("generate", "standard self-maps of an image");
    std::string kind;
    Index value = 0, x0 = 0, x1 = 1;
    std::size_t shift = 2;
    map_generate->add_option("kind", kind, "identity, constant, shift, antipodal, fpf, example-4-2")->required();
    map_generate->add_option("--image", image_path);
    map_generate->add_option("--value", value, "constant value")->capture_default_str();
    map_generate->add_option("--k", shift, "shift amount")->capture_default_str();
    map_generate->add_option("--x0", x0)->capture_default_str();
    map_generate->add_option("--x1", x1)->capture_default_str();
    map_generate->add_option("-o,--output", out_path);
    map_generate->callback([&] {
        action = [&] {
            if (kind == "example-4-2") {
                write_output(map_to_json(example_4_2_map()), out_path);
                return Json();
            }
            if (image_path.empty())
                throw Error("--image is required for " + kind);
            const DigitalImage image = load_image(image_path);
            std::optional<DigitalMap> f;
            if (kind == "identity")
                f = DigitalMap::identity(image);
            else if (kind == "constant")
                f = DigitalMap::constant(image, value);
            else if (kind == "shift")
                f = cyclic_shift(image, shift);
            else if (kind == "antipodal")
                f = antipodal_map(image);
            else if (kind == "fpf")
                f = fixed_point_free_map(image, x0, x1);
            else
                throw Error("unknown map kind \"" + kind + "\"");
            write_output(map_to_json(*f), out_path);
            return Json();
        };
    });

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "contraction and expansion families of a self-map");
    std::string alpha_text;
    classify_cmd->add_option("map", map_path)->required();
    classify_cmd->add_option("--alpha", alpha_text, "also check every family at this multiplier");
    classify_cmd->callback([&] {
        action = [&] {
            std::optional<ExactReal> alpha;
            if (!alpha_text.empty())
                alpha = parse_exact(alpha_text);
            g.json = true;
            return report_to_json(classify(load_map(map_path), MetricSpec::parse(g.metric), alpha));
        };
    });

    // fpp / afpp
    auto* fpp_cmd = app.add_subcommand("fpp", "fixed point property by exhaustive search");
    fpp_cmd->add_option("image", image_path)->required();
    fpp_cmd->callback([&] { action = [&] { return property_json("fpp", has_fpp(load_image(image_path))); }; });
    auto* afpp_cmd = app.add_subcommand("afpp", "approximate fixed point property by exhaustive search");
    afpp_cmd->add_option("image", image_path)->required();
    afpp_cmd->callback([&] { action = [&] { return property_json("afpp", has_afpp(load_image(image_path))); }; });

    // homotopy
    auto* homotopy_cmd = app.add_subcommand("homotopy", "homotopy classes, MF, XF and rigidity");
    homotopy_cmd->require_subcommand(1);
    auto* mf_cmd = homotopy_cmd->add_subcommand("mf", "minimal fixed point count over the class");
    mf_cmd->add_option("map", map_path)->required();
    mf_cmd->callback([&] { action = [&] { return extreme_json("mf", mf(load_map(map_path), g.budget)); }; });
    auto* xf_cmd = homotopy_cmd->add_subcommand("xf", "maximal fixed point count over the class");
    xf_cmd->add_option("map", map_path)->required();
    xf_cmd->callback([&] { action = [&] { return extreme_json("xf", xf(load_map(map_path), g.budget)); }; });
    auto* rigid_cmd = homotopy_cmd->add_subcommand("rigid", "is the identity alone in its class");
    rigid_cmd->add_option("image", image_path)->required();
    rigid_cmd->callback([&] { action = [&] { return Json{{"rigid", is_rigid(load_image(image_path))}}; }; });
    auto* size_cmd = homotopy_cmd->add_subcommand("class-size", "size and fixed point range of the class");
    size_cmd->add_option("map", map_path)->required();
    size_cmd->callback([&] { action = [&] { return summary_to_json(summarize_class(load_map(map_path), g.budget)); }; });
    auto* find_cmd = homotopy_cmd->add_subcommand("find", "shortest homotopy between two maps");
    std::string from_path, to_path;
    find_cmd->add_option("--from", from_path)->required();
    find_cmd->add_option("--to", to_path)->required();
    find_cmd->add_option("--budget", g.budget);
    find_cmd->callback([&] {
        action = [&] {
            const auto trace = find_homotopy(load_map(from_path), load_map(to_path), g.budget);
            return Json{{"homotopic", trace.has_value()},
                        {"length", trace ? Json(trace->length()) : Json(nullptr)},
                        {"trace", trace ? trace_to_json(*trace) : Json(nullptr)}};
        };
    });
    auto* search_cmd =
        homotopy_cmd->add_subcommand("xf-zero-search", "look for a homotopy class with no fixed points at all");
    search_cmd->add_option("image", image_path)->required();
    search_cmd->callback([&] {
        action = [&] {
            const auto s = search_fixed_point_free_class(load_image(image_path), g.budget);
            return Json{{"continuous_maps", s.maps},
                        {"classes", s.classes},
                        {"xf_zero_class", s.witness ? Json(s.witness->table()) : Json(nullptr)}};
        };
    });

    // verify-paper
    auto* verify_cmd = app.add_subcommand("verify-paper", "run the claim suite");
    std::vector<std::string> skip;
    std::string report_path, mutant;
    bool timings = false, list = false;
    std::size_t jobs = 1;
    verify_cmd->add_option("--skip", skip, "claim id to skip (repeatable)");
    verify_cmd->add_option("--report", report_path, "also write the JSON report to this file");
    verify_cmd->add_option("--jobs", jobs, "claims run in parallel")->capture_default_str();
    verify_cmd->add_flag("--timings", timings, "include wall times in the JSON report");
    verify_cmd->add_flag("--list", list, "list claim ids and exit");
    verify_cmd->add_option("--mutant", mutant)->group("");
    verify_cmd->callback([&] {
        action = [&] {
            if (list) {
                for (const auto& c : claim_suite())
                    std::cout << c.id << "  " << c.locus << "\n";
                return Json();
            }
            VerifyOptions options;
            options.skip = {skip.begin(), skip.end()};
            options.seed = g.seed;
            options.budget = g.budget;
            options.jobs = jobs;
            if (!mutant.empty())
                options.primitives = Primitives::mutant(mutant);
            const auto records = run_claims(options);
            const Json report = records_to_json(records, timings);
            if (g.json) {
                std::cerr << records_table(records);
                std::cout << report.dump(2) << "\n";
            } else {
                std::cout << records_table(records);
            }
            if (!report_path.empty())
                write_output(report, report_path);
            if (!all_passed(records))
                exit_code = kExitClaimFailure;
            return Json();
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const Json result = action();
        if (!result.is_null())
            emit(result, g);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    return run(argc, argv);
}
