#include "digifix/io.hpp"
#include "digifix/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace digifix;

namespace {

// JSON crosses the boundary as text; the Python side parses it.
std::string dump(const Json& j) { return j.dump(); }

ExactReal parse_fraction(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        return ExactReal(Rational(text));
    return ExactReal(Rational(boost::multiprecision::cpp_int(text.substr(0, slash)),
                              boost::multiprecision::cpp_int(text.substr(slash + 1))));
}

DigitalImage image_from_points(const std::vector<std::vector<Coord>>& points, unsigned u)
{
    std::vector<Point> pts;
    for (const auto& p : points)
        pts.emplace_back(p);
    return build_image(std::move(pts), AdjacencySpec::cu(u));
}

DigitalImage image_with_edges(const std::vector<std::vector<Coord>>& points,
                              const std::vector<std::pair<Index, Index>>& edges)
{
    std::vector<Point> pts;
    for (const auto& p : points)
        pts.emplace_back(p);
    return build_image(std::move(pts), AdjacencySpec::custom(edges));
}

std::vector<std::vector<Coord>> points_of(const DigitalImage& x)
{
    std::vector<std::vector<Coord>> out;
    for (const auto& p : x.points())
        out.push_back(p.coords);
    return out;
}

} // namespace

PYBIND11_MODULE(_digifix, m)
{
    m.doc() = "Digital images, digital metrics, self-map classification and digital homotopy.";

    py::register_exception<Error>(m, "DigifixError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<DigitalImage>(m, "Image")
        .def_property_readonly("size", &DigitalImage::size)
        .def_property_readonly("dim", &DigitalImage::dim)
        .def_property_readonly("points", &points_of)
        .def("neighbors",
             [](const DigitalImage& x, Index i) {
                 if (i >= x.size())
                     throw Error("index out of range");
                 auto n = x.neighbors(i);
                 return std::vector<Index>(n.begin(), n.end());
             })
        .def("adjacent", &DigitalImage::adjacent)
        .def_property_readonly("edge_count", &DigitalImage::edge_count)
        .def("to_json", [](const DigitalImage& x) { return dump(image_to_json(x)); })
        .def("__len__", &DigitalImage::size)
        .def("__eq__", [](const DigitalImage& a, const DigitalImage& b) { return a == b; });

    py::class_<DigitalMap>(m, "Map")
        .def(py::init<DigitalImage, MapTable>(), py::arg("image"), py::arg("table"))
        .def(py::init<DigitalImage, DigitalImage, MapTable>(), py::arg("domain"), py::arg("codomain"),
             py::arg("table"))
        .def_static("identity", &DigitalMap::identity)
        .def_static("constant", &DigitalMap::constant)
        .def_property_readonly("table", &DigitalMap::table)
        .def_property_readonly("domain", &DigitalMap::domain)
        .def_property_readonly("codomain", &DigitalMap::codomain)
        .def("__call__", [](const DigitalMap& f, Index x) {
            if (x >= f.size())
                throw Error("index out of range");
            return f(x);
        })
        .def("to_json", [](const DigitalMap& f) { return dump(map_to_json(f)); })
        .def("__eq__", [](const DigitalMap& a, const DigitalMap& b) { return a == b; });

    m.def("image", &image_from_points, py::arg("points"), py::arg("u") = 1);
    m.def("image_with_edges", &image_with_edges, py::arg("points"), py::arg("edges"));
    m.def("image_from_json", [](const std::string& text) { return image_from_json(Json::parse(text)); });
    m.def("map_from_json", [](const std::string& text) { return map_from_json(Json::parse(text)); });
    m.def("singleton", &singleton, py::arg("dim") = 1);
    m.def("interval", &digital_interval, py::arg("a"), py::arg("b"));
    m.def("picture", [](const std::vector<std::pair<Coord, Coord>>& bounds) { return digital_picture(bounds); });
    m.def("simple_closed_curve", &simple_closed_curve);
    m.def("wedge_of_loops", &wedge_of_loops);
    m.def("normal_product", &normal_product);
    m.def("example_4_2_image", &example_4_2_image);
    m.def("example_4_2_map", &example_4_2_map);
    m.def("punctured_square", &punctured_square, py::arg("u"));
    m.def("is_connected", &is_connected);

    m.def("distance", [](const DigitalImage& x, Index i, Index j, const std::string& metric) {
        if (i >= x.size() || j >= x.size())
            throw Error("index out of range");
        return dump(exact_to_json((*distance_table(x, MetricSpec::parse(metric)))(i, j)));
    });
    m.def("diameter", [](const DigitalImage& x, const std::string& metric) {
        return dump(exact_to_json(diameter(x, MetricSpec::parse(metric))));
    });
    m.def("min_positive_distance", [](const DigitalImage& x, const std::string& metric) {
        return dump(exact_to_json(min_positive_distance(x, MetricSpec::parse(metric))));
    });
    m.def("eventually_constant_tail",
          [](const std::vector<Index>& s, const DigitalImage& x, const std::string& metric) {
              return eventually_constant_tail(s, x, MetricSpec::parse(metric));
          });

    m.def("is_continuous", py::overload_cast<const DigitalMap&>(&is_continuous));
    m.def("fixed_points", &fixed_points);
    m.def("approximate_fixed_points", &approximate_fixed_points);
    m.def("has_fpp", [](const DigitalImage& x) {
        const auto v = has_fpp(x);
        return std::make_pair(v.holds, v.witness);
    });
    m.def("has_afpp", [](const DigitalImage& x) {
        const auto v = has_afpp(x);
        return std::make_pair(v.holds, v.witness);
    });
    m.def("continuous_selfmaps", [](const DigitalImage& x) {
        std::vector<MapTable> out;
        for (const auto& f : enumerate_continuous_selfmaps(x))
            out.push_back(f.table());
        return out;
    });
    m.def("cyclic_shift", &cyclic_shift);
    m.def("antipodal_map", &antipodal_map);

    m.def(
        "classify",
        [](const DigitalMap& f, const std::string& metric, const std::optional<std::string>& alpha) {
            std::optional<ExactReal> a;
            if (alpha)
                a = parse_fraction(*alpha);
            return dump(report_to_json(classify(f, MetricSpec::parse(metric), a)));
        },
        py::arg("f"), py::arg("metric") = "l1", py::arg("alpha") = py::none());

    m.def("is_one_step_homotopic", &is_one_step_homotopic);
    m.def(
        "homotopy_class", [](const DigitalMap& f, std::size_t budget) { return homotopy_class(f, budget); },
        py::arg("f"), py::arg("budget") = kDefaultNodeBudget);
    m.def(
        "find_homotopy",
        [](const DigitalMap& f, const DigitalMap& g, std::size_t budget) -> std::optional<std::vector<MapTable>> {
            const auto trace = find_homotopy(f, g, budget);
            if (!trace)
                return std::nullopt;
            std::vector<MapTable> steps;
            for (const auto& s : trace->steps)
                steps.push_back(s.table());
            return steps;
        },
        py::arg("f"), py::arg("g"), py::arg("budget") = kDefaultNodeBudget);
    m.def(
        "mf", [](const DigitalMap& f, std::size_t budget) { return mf(f, budget).value; }, py::arg("f"),
        py::arg("budget") = kDefaultNodeBudget);
    m.def(
        "xf", [](const DigitalMap& f, std::size_t budget) { return xf(f, budget).value; }, py::arg("f"),
        py::arg("budget") = kDefaultNodeBudget);
    m.def("is_rigid", &is_rigid);
    m.def("has_homotopy_fixed_point_property", &has_homotopy_fixed_point_property);

    m.def("claim_ids", [] {
        std::vector<std::string> ids;
        for (const auto& c : claim_suite())
            ids.push_back(c.id);
        return ids;
    });
    m.def(
        "verify",
        [](const std::vector<std::string>& skip) {
            VerifyOptions options;
            options.skip = {skip.begin(), skip.end()};
            std::vector<ClaimRecord> records;
            {
                py::gil_scoped_release release;
                records = run_claims(options);
            }
            return dump(records_to_json(records, false));
        },
        py::arg("skip") = std::vector<std::string>{});
}
