#include "ballmapper/cli.hpp"
#include "ballmapper/cloud.hpp"
#include "ballmapper/color.hpp"
#include "ballmapper/error.hpp"
#include "ballmapper/graph.hpp"
#include "ballmapper/net.hpp"
#include "ballmapper/render.hpp"
#include "ballmapper/synth.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace ballmapper;

namespace {

PointCloud cloud_from_rows(const std::vector<std::vector<double>>& rows, std::vector<std::string> axes) {
    if (axes.empty() && !rows.empty())
        for (std::size_t a = 0; a < rows.front().size(); ++a) axes.push_back("x" + std::to_string(a));
    return PointCloud::from_rows(std::move(axes), rows);
}

std::vector<std::vector<double>> cloud_rows(const PointCloud& c) {
    std::vector<std::vector<double>> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto r = c.row(i);
        out[i].assign(r.begin(), r.end());
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Ball Mapper graphs of point clouds";

    auto base = py::register_exception<Error>(m, "BallMapperError");
    py::register_exception<DataError>(m, "DataError", base.ptr());
    py::register_exception<IoError>(m, "IoError", base.ptr());
    py::register_exception<ArgumentError>(m, "ArgumentError", base.ptr());

    py::class_<PointCloud>(m, "PointCloud")
        .def(py::init(&cloud_from_rows), py::arg("rows"), py::arg("axes") = std::vector<std::string>{})
        .def_property_readonly("size", &PointCloud::size)
        .def_property_readonly("dims", &PointCloud::dims)
        .def_property_readonly("axes", &PointCloud::axis_names)
        .def_property_readonly("row_ids", &PointCloud::row_ids)
        .def("rows", &cloud_rows)
        .def("fingerprint", &PointCloud::fingerprint)
        .def("__len__", &PointCloud::size);

    m.def(
        "load_csv",
        [](const std::string& path, const std::vector<std::string>& axes, const std::vector<std::string>& meta) {
            return load_csv(path, axes, meta).cloud;
        },
        py::arg("path"), py::arg("axes"), py::arg("meta") = std::vector<std::string>{});

    m.def(
        "rolling_moments",
        [](const std::vector<double>& series, std::size_t window) {
            py::list out;
            for (const auto& r : rolling_moments(series, window))
                out.append(py::make_tuple(r.mean, r.sd, r.skewness ? py::cast(*r.skewness) : py::none()));
            return out;
        },
        py::arg("series"), py::arg("window"), "List of (mean, sd, skewness or None), aligned to window ends");

    py::class_<BallCover>(m, "BallCover")
        .def_readonly("epsilon", &BallCover::epsilon)
        .def_readonly("centers", &BallCover::centers)
        .def_readonly("members", &BallCover::members)
        .def_readonly("membership", &BallCover::membership);

    m.def(
        "greedy_net",
        [](const PointCloud& cloud, double eps, const std::string& metric, const std::string& pick,
           std::uint64_t seed) {
            return greedy_net(cloud, eps, parse_metric(metric), {parse_pick_order(pick), seed});
        },
        py::arg("cloud"), py::arg("epsilon"), py::arg("metric") = "euclidean", py::arg("pick") = "first",
        py::arg("seed") = 0);

    py::class_<BMGraph>(m, "Graph")
        .def_readonly("epsilon", &BMGraph::epsilon)
        .def_property_readonly("vertex_count", &BMGraph::vertex_count)
        .def_property_readonly("edge_count", &BMGraph::edge_count)
        .def_property_readonly("members",
                               [](const BMGraph& g) {
                                   std::vector<std::vector<std::size_t>> out;
                                   for (const auto& n : g.nodes) out.push_back(n.members);
                                   return out;
                               })
        .def_property_readonly("edges",
                               [](const BMGraph& g) {
                                   std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
                                   for (const auto& e : g.edges) out.emplace_back(e.a, e.b, e.shared);
                                   return out;
                               })
        .def("outliers", &list_outliers)
        .def("components", &connected_components)
        .def("to_json", &graph_to_json)
        .def_static("from_json", &graph_from_json)
        .def("to_dot", [](const BMGraph& g) { return export_dot(g); })
        .def(
            "to_svg",
            [](const BMGraph& g, std::optional<std::vector<double>> values, std::uint64_t seed) {
                const auto layout = layout_graph(g, seed);
                if (!values) return render_svg(g, layout, nullptr);
                const auto c = Coloring::from_values(*values, "value");
                return render_svg(g, layout, &c);
            },
            py::arg("values") = py::none(), py::arg("seed") = 0);

    m.def(
        "ball_mapper",
        [](const PointCloud& cloud, double eps, const std::string& metric) {
            auto g = build_graph(greedy_net(cloud, eps, parse_metric(metric)), cloud.axis_names());
            g.provenance.cloud_fingerprint = cloud.fingerprint();
            return g;
        },
        py::arg("cloud"), py::arg("epsilon"), py::arg("metric") = "euclidean");

    m.def(
        "color_by_values",
        [](const BMGraph& g, const std::vector<double>& values) { return color_by_values(g, values, "value").values; },
        py::arg("graph"), py::arg("point_values"), "Mean of a per-point value over each ball");
    m.def(
        "color_by_distance",
        [](const BMGraph& g, const PointCloud& cloud, const std::vector<std::size_t>& ref_rows) {
            return color_by_distance(g, cloud, ReferenceSpec::rows(ref_rows)).values;
        },
        py::arg("graph"), py::arg("cloud"), py::arg("reference_rows"));

    m.def("correlation_grid", &default_correlation_grid);
    m.def(
        "gen_correlated",
        [](const std::vector<double>& x0, const std::vector<double>& y0, double r) {
            return gen_correlated(x0, y0, r);
        },
        py::arg("x0"), py::arg("y0"), py::arg("r"));
    m.def(
        "base_draws",
        [](std::size_t n, std::uint64_t seed) {
            auto b = base_draws(n, seed);
            return py::make_tuple(b.x0, b.y0);
        },
        py::arg("n"), py::arg("seed"));
    m.def(
        "gen_outcome",
        [](const std::vector<double>& x0, const std::vector<double>& y0, double coef_x, double coef_y, double sd,
           std::uint64_t seed) { return gen_outcome(x0, y0, {coef_x, coef_y, sd}, seed); },
        py::arg("x0"), py::arg("y0"), py::arg("coef_x") = 0.3, py::arg("coef_y") = 0.6, py::arg("sd") = 1.0,
        py::arg("seed") = 0);
    m.def("gen_normal_cloud", &gen_normal_cloud, py::arg("n"), py::arg("d"), py::arg("targets"), py::arg("seed"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::vector<std::string> full{"ballmapper"};
            full.insert(full.end(), args.begin(), args.end());
            std::ostringstream out, err;
            const int code = cli::run(full, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line tool in process; returns (exit_code, stdout, stderr)");
}
