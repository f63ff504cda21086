#include "ballmapper/error.hpp"
#include "ballmapper/render.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <regex>
#include <set>

using namespace ballmapper;

namespace {

PointCloud line(std::vector<double> xs) {
    std::vector<std::vector<double>> rows;
    for (double x : xs) rows.push_back({x});
    return PointCloud::from_rows({"x"}, rows);
}

BMGraph graph_of(const PointCloud& cloud, double eps) {
    return build_graph(greedy_net(cloud, eps), cloud.axis_names());
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST(RenderSvg, OneCirclePerBallOneLinePerEdge) {
    auto g = graph_of(line({0, 1, 2}), 1.0);
    auto layout = layout_graph(g, 1);
    auto svg = render_svg(g, layout, nullptr);
    EXPECT_EQ(count(svg, "<circle"), 2u);
    EXPECT_EQ(count(svg, "<line"), 1u);
    auto colored = render_svg(g, layout, nullptr, {});
    EXPECT_EQ(svg, colored);

    auto coloring = Coloring::from_values({0.0, 1.0}, "x");
    auto with_legend = render_svg(g, layout, &coloring);
    EXPECT_EQ(count(with_legend, "<circle"), 2u);
    EXPECT_EQ(count(with_legend, "<line"), 1u);
    EXPECT_NE(with_legend.find("#ff0000"), std::string::npos);
    EXPECT_NE(with_legend.find("#9400d3"), std::string::npos);
}

TEST(RenderSvg, SizeMismatchIsRejected) {
    auto g = graph_of(line({0, 1, 2}), 1.0);
    auto layout = layout_graph(g, 1);
    auto bad = Coloring::from_values({1.0}, "x");
    EXPECT_THROW(render_svg(g, layout, &bad), DataError);
    EXPECT_THROW(export_dot(g, &bad), DataError);
}

TEST(Layout, RadiusGrowsWithSquareRootOfCount) {
    auto g = graph_of(line({0, 0.1, 0.2, 0.3, 5}), 0.5);
    ASSERT_EQ(g.nodes[0].count(), 4u);
    ASSERT_EQ(g.nodes[1].count(), 1u);
    auto layout = layout_graph(g, 3);
    EXPECT_NEAR(layout.radii[0] / layout.radii[1], 2.0, 1e-12);
}

TEST(Layout, EdgeLengthNearSpringLength) {
    auto g = graph_of(line({0, 1, 2}), 1.0);
    auto layout = layout_graph(g, 5);
    const double d = std::hypot(layout.positions[0].x - layout.positions[1].x,
                                layout.positions[0].y - layout.positions[1].y);
    EXPECT_GE(d, 0.5);
    EXPECT_LE(d, 2.0);
}

TEST(Layout, SingleVertexAtOrigin) {
    auto g = graph_of(line({1, 2}), 5.0);
    auto layout = layout_graph(g, 5);
    EXPECT_EQ(layout.positions[0].x, 0.0);
    EXPECT_EQ(layout.positions[0].y, 0.0);
    EXPECT_THROW(layout_graph(g, 5, 0), ArgumentError);
}

TEST(Layout, ComponentsDoNotOverlap) {
    auto g = graph_of(line({0, 1, 2, 10, 11, 20, 30}), 1.0);
    auto layout = layout_graph(g, 2);
    for (const auto& p : layout.positions) {
        EXPECT_TRUE(std::isfinite(p.x));
        EXPECT_TRUE(std::isfinite(p.y));
    }
    for (std::size_t a = 0; a < g.vertex_count(); ++a)
        for (std::size_t b = a + 1; b < g.vertex_count(); ++b)
            EXPECT_GT(std::hypot(layout.positions[a].x - layout.positions[b].x,
                                 layout.positions[a].y - layout.positions[b].y),
                      layout.radii[a] + layout.radii[b] - 1e-9);
}

TEST(Layout, SameSeedSameBytes) {
    auto cloud = oracle::random_cloud(150, 3, 4);
    auto g = graph_of(cloud, 0.8);
    auto coloring = Coloring::from_values(std::vector<double>(g.vertex_count(), 1.0), "c");
    auto a = render_svg(g, layout_graph(g, 9), &coloring);
    auto b = render_svg(g, layout_graph(g, 9), &coloring);
    EXPECT_EQ(a, b);
    EXPECT_EQ(export_dot(g, &coloring), export_dot(g, &coloring));
}

TEST(ExportDot, ParsesBackToSameGraph) {
    auto cloud = oracle::random_cloud(120, 2, 6);
    auto g = graph_of(cloud, 0.6);
    const auto dot = export_dot(g);
    EXPECT_EQ(dot.rfind("graph ballmapper {", 0), 0u);

    std::set<std::pair<std::size_t, std::size_t>> nodes;
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> edges;
    const std::regex node_re(R"(^  (\d+) \[label="\d+", count=(\d+), width=[0-9.]+\];$)");
    const std::regex edge_re(R"(^  (\d+) -- (\d+) \[weight=(\d+)\];$)");
    std::istringstream in(dot);
    std::string ln;
    std::smatch m;
    while (std::getline(in, ln)) {
        if (std::regex_match(ln, m, node_re))
            nodes.insert({std::stoul(m[1]), std::stoul(m[2])});
        else if (std::regex_match(ln, m, edge_re))
            edges.insert({std::stoul(m[1]), std::stoul(m[2]), std::stoul(m[3])});
    }
    std::set<std::pair<std::size_t, std::size_t>> expect_nodes;
    for (const auto& n : g.nodes) expect_nodes.insert({n.id, n.count()});
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> expect_edges;
    for (const auto& e : g.edges) expect_edges.insert({e.a, e.b, e.shared});
    EXPECT_EQ(nodes, expect_nodes);
    EXPECT_EQ(edges, expect_edges);
}

TEST(ExportDot, ColoredNodesCarryFill) {
    auto g = graph_of(line({0, 1, 2}), 1.0);
    auto coloring = Coloring::from_values({0.5, 1.5}, "x");
    const auto dot = export_dot(g, &coloring);
    EXPECT_NE(dot.find("style=filled"), std::string::npos);
    EXPECT_NE(dot.find("fillcolor=\"#ff0000\", value=\"0.5\""), std::string::npos);
}
